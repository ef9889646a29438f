#pragma once

// Uniform sampling grids and centred finite-difference stencils used by the
// Klein-Gordon residual checks.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <vector>

#include "adsosc/errors.hpp"

namespace adsosc {

/// Uniform grid lo, lo+h, ..., up to hi (physical length units).
struct UniformGrid {
  double lo = -8.0;
  double hi = 8.0;
  double h = 0.01;

  void validate() const {
    if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(h)))
      throw DomainError("grid: bounds must be finite");
    if (!(h > 0)) throw DomainError("grid: spacing must be > 0");
    if (!(hi > lo)) throw DomainError("grid: hi must exceed lo");
    if ((hi - lo) / h < 8) throw DomainError("grid: fewer than 8 intervals");
  }
  std::size_t size() const { return std::size_t(std::floor((hi - lo) / h + 1e-9)) + 1; }
  double at(std::size_t i) const { return lo + double(i) * h; }
  UniformGrid halved() const { return {lo, hi, h / 2}; }
};

/// Outcome of a residual evaluation and its refinement at h/2.
struct ResidualReport {
  double residual = 0.0;  // relative residual at h
  double refined = 0.0;   // relative residual at h/2
  double order = 0.0;     // log2(residual / refined); NaN when already at roundoff
  bool resolved = true;   // false when the residual is roundoff (state solved exactly by the stencil)
  bool coarse_warning = false;
};

namespace fd {

/// Fourth-order centred second derivative at i from samples f[i-2..i+2].
template <std::floating_point Real>
Real second_derivative4(const std::vector<Real>& f, std::size_t i, Real h) {
  return (-f[i + 2] + 16 * f[i + 1] - 30 * f[i] + 16 * f[i - 1] - f[i - 2]) / (12 * h * h);
}

/// Fourth-order centred first derivative at i.
template <std::floating_point Real>
Real first_derivative4(const std::vector<Real>& f, std::size_t i, Real h) {
  return (-f[i + 2] + 8 * f[i + 1] - 8 * f[i - 1] + f[i - 2]) / (12 * h);
}

/// Second-order centred second derivative (used only to show the order gap in tests).
template <std::floating_point Real>
Real second_derivative2(const std::vector<Real>& f, std::size_t i, Real h) {
  return (f[i + 1] - 2 * f[i] + f[i - 1]) / (h * h);
}

}  // namespace fd

namespace detail {

// The 4th-order stencil should gain ~16x per halving; anything below 8x
// (order < 3) means the grid is not yet in the asymptotic regime. The second
// difference amplifies rounding by 1/h^2, so a refined residual below
// ~1e3 eps/(h/2)^2 is noise and carries no order information.
inline ResidualReport make_residual_report(double coarse, double fine, double h, double eps) {
  ResidualReport r;
  r.residual = coarse;
  r.refined = fine;
  r.resolved = fine > 1e3 * eps / (0.25 * h * h);
  if (!r.resolved) {
    r.order = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  r.order = fine > 0 ? std::log2(coarse / fine) : std::numeric_limits<double>::infinity();
  r.coarse_warning = !(r.order >= 3.0);
  return r;
}

}  // namespace detail

}  // namespace adsosc
