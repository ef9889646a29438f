#pragma once

// Physical inputs shared by the 1D and 3D models, and the conversion between
// physical and natural units (hbar = omega = 1, lengths in L = c/omega).

#include <cmath>
#include <string>

#include "adsosc/errors.hpp"

namespace adsosc {

/// Unvalidated physical parameter tuple (M, omega, c, hbar, xi).
struct RawParams {
  double mass = 0.0;
  double omega = 1.0;
  double c = 1.0;
  double hbar = 1.0;
  double xi = 0.0;

  /// Parameters in natural units that realise a given N = Mc^2/(hbar omega).
  static RawParams from_N(double N, double xi) {
    RawParams p;
    p.mass = N;
    p.xi = xi;
    return p;
  }
};

/// Unit system of a validated parameter set.
struct Scales {
  double mass = 0.0;
  double omega = 1.0;
  double c = 1.0;
  double hbar = 1.0;

  double length() const { return c / omega; }        // L = c/omega
  double energy_unit() const { return hbar * omega; }
  double N() const { return mass * c * c / (hbar * omega); }

  double to_natural_length(double x) const { return x / length(); }
  double to_natural_energy(double e) const { return e / energy_unit(); }
  double from_natural_energy(double e) const { return e * energy_unit(); }
  /// Wave functions: psi_phys = psi_natural / sqrt(L).
  double wavefn_scale() const { return 1.0 / std::sqrt(length()); }
  /// Green's functions: G_phys = G_natural / (hbar^2 omega c).
  double green_scale() const { return 1.0 / (hbar * hbar * omega * c); }
};

namespace detail {

inline bool finite_all(const RawParams& p) {
  return std::isfinite(p.mass) && std::isfinite(p.omega) && std::isfinite(p.c) &&
         std::isfinite(p.hbar) && std::isfinite(p.xi);
}

inline Scales validate_scales(const RawParams& p) {
  if (!finite_all(p)) throw ParameterError("parameters must be finite");
  if (!(p.omega > 0)) throw ParameterError("omega must be > 0");
  if (!(p.c > 0)) throw ParameterError("c must be > 0");
  if (!(p.hbar > 0)) throw ParameterError("hbar must be > 0");
  if (p.mass < 0) throw ParameterError("mass must be >= 0");
  return Scales{p.mass, p.omega, p.c, p.hbar};
}

}  // namespace detail

}  // namespace adsosc
