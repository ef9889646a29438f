#pragma once

// Finite-difference oracle for the bound-state energies. The stationary
// problem in u is H(E) = -1/2 d^2/du^2 + V(u; E) with
//   V(u) = const + tanh_coeff tanh u - sech2_coeff / cosh^2 u,
// and E is an energy level exactly when H(E) has a zero eigenvalue. H(E) is
// discretized with second-order differences on a truncated u-grid, the zero
// crossing of its (n+1)-th eigenvalue is bracketed with Sturm counts, and two
// grid levels are combined by Richardson extrapolation. Nothing here uses the
// closed-form spectra.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "adsosc/errors.hpp"
#include "adsosc/model1d.hpp"
#include "adsosc/model3d.hpp"

namespace adsosc::fdoracle {

struct EffectivePotential {
  double const_term = 0.0;
  double tanh_coeff = 0.0;
  double sech2_coeff = 0.0;

  double operator()(double u) const {
    const double ch = std::cosh(u);
    return const_term + tanh_coeff * std::tanh(u) - sech2_coeff / (ch * ch);
  }
  /// Asymptotic values V(-inf), V(+inf).
  double left_limit() const { return const_term - tanh_coeff; }
  double right_limit() const { return const_term + tanh_coeff; }
};

/// Symmetric Rosen-Morse form of the 1D problem; e is the energy in hbar*omega.
inline EffectivePotential effective_potential_1d(const oned::OscillatorParams& p, double e) {
  return {0.5 * (p.N * p.N - 2.0 * p.xi + 0.25), 0.0, 0.5 * (e * e - 0.25)};
}

/// General Rosen-Morse form of the radial problem; e in hbar*omega.
inline EffectivePotential effective_potential_3d(const threed::RadialChannel& ch, double e) {
  const double nu2 = ch.N * ch.N - 2.0 * ch.beta - ch.alpha + 2.75;
  const double k2 = ch.k * ch.k;
  return {0.25 * (nu2 + k2), 0.25 * (nu2 - k2), (e * e + 4.0 * ch.beta - ch.alpha - 2.0) / 8.0};
}

/// Dirichlet grid of n_points interior nodes on (u_min, u_max).
struct GridSpec {
  double u_min = -12.0;
  double u_max = 12.0;
  int n_points = 2000;

  void validate() const {
    if (!(std::isfinite(u_min) && std::isfinite(u_max))) throw DomainError("GridSpec: bounds must be finite");
    if (!(u_max - u_min >= 24.0)) throw DomainError("GridSpec: u_max - u_min must be >= 24");
    if (n_points < 2000) throw DomainError("GridSpec: n_points must be >= 2000");
  }
  double spacing() const { return (u_max - u_min) / double(n_points + 1); }
  double node(int i) const { return u_min + double(i + 1) * spacing(); }
  /// Same interval with 2 n_points + 1 nodes, i.e. spacing exactly halved.
  GridSpec refined() const { return {u_min, u_max, 2 * n_points + 1}; }
};

/// Grid sized from the decay rates sqrt(2 V(+-inf)) of zero-energy states, so
/// the truncation error exp(-2 kappa |u|) stays far below the root tolerance.
inline GridSpec default_grid(const EffectivePotential& pot, double target_h = 0.01) {
  const double kl = std::sqrt(std::max(2.0 * pot.left_limit(), 1e-6));
  const double kr = std::sqrt(std::max(2.0 * pot.right_limit(), 1e-6));
  const double lo = -std::max(12.0, 17.0 / kl);
  const double hi = std::max(12.0, 17.0 / kr);
  const int n = std::max(2000, int(std::ceil((hi - lo) / target_h)));
  return {lo, hi, n};
}

struct BandedOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size n-1

  std::size_t size() const { return diagonal.size(); }
};

inline BandedOperator build_operator(const EffectivePotential& pot, const GridSpec& grid) {
  grid.validate();
  const double h = grid.spacing();
  const double kin = 0.5 / (h * h);
  BandedOperator op;
  op.diagonal.resize(std::size_t(grid.n_points));
  op.off_diagonal.assign(std::size_t(grid.n_points - 1), -kin);
  for (int i = 0; i < grid.n_points; ++i) op.diagonal[std::size_t(i)] = 2.0 * kin + pot(grid.node(i));
  return op;
}

/// Number of eigenvalues strictly below sigma (Sturm sequence / LDL^T inertia).
inline int sturm_count(const BandedOperator& op, double sigma) {
  const std::size_t n = op.size();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i == 0 ? 0.0 : op.off_diagonal[i - 1] * op.off_diagonal[i - 1];
    q = (op.diagonal[i] - sigma) - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(op.diagonal[i]) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

/// The `count` smallest eigenvalues in ascending order, by bisection on Sturm counts.
inline std::vector<double> lowest_eigenvalues(const BandedOperator& op, int count) {
  if (count < 0 || count > 50) throw DomainError("lowest_eigenvalues: count must lie in [0, 50]");
  if (std::size_t(count) > op.size()) throw DomainError("lowest_eigenvalues: count exceeds dimension");
  // Gershgorin interval
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  const std::size_t n = op.size();
  for (std::size_t i = 0; i < n; ++i) {
    double rad = 0.0;
    if (i > 0) rad += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) rad += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - rad);
    hi = std::max(hi, op.diagonal[i] + rad);
  }
  std::vector<double> out;
  out.reserve(std::size_t(count));
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(op, mid) >= k + 1) b = mid;
      else a = mid;
      if (b - a <= 1e-13 * std::max(1.0, std::abs(mid))) break;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

struct OracleOptions {
  double tolerance = 1e-11;  // bisection width in hbar*omega
  int max_expansions = 60;
  bool richardson = true;
};

struct OracleResult {
  double energy = 0.0;  // physical units (Richardson value when enabled)
  double coarse = 0.0;  // root on the given grid, hbar*omega
  double fine = 0.0;    // root on the grid with h/2, hbar*omega
  int bisections = 0;
};

namespace detail {

// Smallest e > 0 with at least n+1 eigenvalues of H(e) below zero.
template <class PotentialAt>
double root_on_grid(PotentialAt&& pot_at, int n, const GridSpec& grid, double e_start,
                    const OracleOptions& opt, int& bisections) {
  auto count_at = [&](double e) { return sturm_count(build_operator(pot_at(e), grid), 0.0); };
  double lo = 0.0;
  if (count_at(lo) >= n + 1) throw BracketError("oracle: state already bound at E = 0");
  double hi = std::max(e_start, 1.0);
  int expansions = 0;
  while (count_at(hi) < n + 1) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > opt.max_expansions)
      throw BracketError("oracle: no sign change up to E_hi = " + std::to_string(hi));
  }
  while (hi - lo > opt.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_at(mid) >= n + 1) hi = mid;
    else lo = mid;
    ++bisections;
  }
  return 0.5 * (lo + hi);
}

template <class PotentialAt>
OracleResult solve(PotentialAt&& pot_at, int n, const GridSpec& grid, double e_start,
                   double energy_unit, const OracleOptions& opt) {
  if (n < 0) throw DomainError("oracle: state index must be >= 0");
  grid.validate();
  OracleResult r;
  r.coarse = root_on_grid(pot_at, n, grid, e_start, opt, r.bisections);
  if (opt.richardson) {
    r.fine = root_on_grid(pot_at, n, grid.refined(), e_start, opt, r.bisections);
    r.energy = (4.0 * r.fine - r.coarse) / 3.0;
  } else {
    r.fine = r.coarse;
    r.energy = r.coarse;
  }
  r.energy *= energy_unit;
  return r;
}

}  // namespace detail

/// Energy of the n-th 1D state from the zero-eigenvalue condition of H(E).
inline OracleResult oracle_energy_1d(const oned::OscillatorParams& p, int n, const GridSpec& grid,
                                     const OracleOptions& opt = {}) {
  auto pot_at = [&](double e) { return effective_potential_1d(p, e); };
  const double e_start = std::sqrt(2.0 * std::max(pot_at(0.0).const_term, 0.0));
  return detail::solve(pot_at, n, grid, e_start, p.scales.energy_unit(), opt);
}

inline OracleResult oracle_energy_1d(const oned::OscillatorParams& p, int n,
                                     const OracleOptions& opt = {}) {
  return oracle_energy_1d(p, n, default_grid(effective_potential_1d(p, 0.0)), opt);
}

/// Energy of the (n_r, l) radial state from the general Rosen-Morse operator.
inline OracleResult oracle_energy_3d(const threed::RadialChannel& ch, int n_r, const GridSpec& grid,
                                     const OracleOptions& opt = {}) {
  auto pot_at = [&](double e) { return effective_potential_3d(ch, e); };
  const double e_start = std::sqrt(2.0 * std::max(pot_at(0.0).const_term, 0.0));
  return detail::solve(pot_at, n_r, grid, e_start, ch.scales.energy_unit(), opt);
}

inline OracleResult oracle_energy_3d(const threed::RadialChannel& ch, int n_r,
                                     const OracleOptions& opt = {}) {
  return oracle_energy_3d(ch, n_r, default_grid(effective_potential_3d(ch, 0.0)), opt);
}

}  // namespace adsosc::fdoracle
