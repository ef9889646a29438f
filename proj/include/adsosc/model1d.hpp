#pragma once

// (1+1)-dimensional relativistic oscillator: spectrum, normalized bound
// states in Legendre and Gegenbauer form, closed and spectral Green's
// functions, the Klein-Gordon residual and the non-relativistic limit.
//
// Everything is computed in natural units (hbar = omega = 1, x in L = c/omega)
// and converted at the boundary: E in hbar*omega, psi in 1/sqrt(L),
// G in 1/(hbar^2 omega c).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "adsosc/errors.hpp"
#include "adsosc/grid.hpp"
#include "adsosc/params.hpp"
#include "adsosc/specfun.hpp"

namespace adsosc::oned {

struct OscillatorParams {
  Scales scales;
  double xi = 0.0;
  double N = 0.0;
  double alpha = 2.0;  // 2 xi + 2
  double beta = 0.5;   // xi + 1/2
  double kappa = 0.0;  // (Mc/hbar)^2 + (1 - 2 beta) omega^2/c^2, in units of omega^2/c^2
  double gamma = 0.5;  // +1/2 sqrt(1 + 4N^2 - 8 xi)

  double length() const { return scales.length(); }
};

inline OscillatorParams validate(const RawParams& raw) {
  OscillatorParams p;
  p.scales = adsosc::detail::validate_scales(raw);
  p.xi = raw.xi;
  p.N = p.scales.N();
  const double disc = 1.0 + 4.0 * p.N * p.N - 8.0 * p.xi;
  if (!(disc > 0))
    throw ParameterError("xi out of range: need xi < (1 + 4N^2)/8 = " +
                         std::to_string((1.0 + 4.0 * p.N * p.N) / 8.0));
  p.alpha = 2.0 * p.xi + 2.0;
  p.beta = p.xi + 0.5;
  p.kappa = p.N * p.N + 1.0 - 2.0 * p.beta;
  p.gamma = 0.5 * std::sqrt(disc);
  return p;
}

/// E_n in natural units.
inline double energy_natural(const OscillatorParams& p, int n) { return double(n) + 0.5 + p.gamma; }

/// E_n = (n + 1/2 + gamma) hbar omega.
inline double energy(const OscillatorParams& p, int n) {
  if (n < 0) throw DomainError("energy: n must be >= 0");
  return p.scales.from_natural_energy(energy_natural(p, n));
}

namespace detail {

// log of the normalization bracket combined with the Ferrers->Jacobi factor
// 2^{-gamma} n!/Gamma(n+gamma+1), so that psi = exp(A) Lambda^{-(gamma+3/2)/2} P_n^{(gamma,gamma)}(y).
template <std::floating_point Real>
Real log_amplitude(Real gamma, int n) {
  using specfun::ln_gamma;
  const Real nn = Real(n);
  const Real ln_nfact = ln_gamma(nn + 1).value;
  const Real bracket = std::log(nn + gamma + Real(0.5)) + ln_gamma(2 * gamma + nn + 1).value - ln_nfact;
  return bracket / 2 - gamma * std::numbers::ln2_v<Real> + ln_nfact - ln_gamma(nn + gamma + 1).value;
}

template <std::floating_point Real>
Real wavefn_natural(Real gamma, int n, Real x) {
  const Real lam = 1 + x * x;
  const Real y = x / std::sqrt(lam);
  const Real jac = specfun::jacobi_p(n, gamma, gamma, y);
  return std::exp(log_amplitude(gamma, n) - (gamma + Real(1.5)) / 2 * std::log(lam)) * jac;
}

// psi_0 .. psi_{count-1} at one natural-unit point.
inline std::vector<double> wavefn_sequence_natural(double gamma, int count, double x) {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return out;
  const double lam = 1 + x * x;
  const double y = x / std::sqrt(lam);
  const auto jac = specfun::jacobi_p_sequence(count - 1, gamma, gamma, y);
  const double base = -(gamma + 1.5) / 2 * std::log(lam);
  for (int n = 0; n < count; ++n)
    out[std::size_t(n)] = std::exp(log_amplitude(gamma, n) + base) * jac[std::size_t(n)];
  return out;
}

inline void check_pole(const OscillatorParams& p, double e_nat, int horizon, double radius) {
  const double e = std::abs(e_nat);
  const double k = std::round(e - 0.5 - p.gamma);
  if (k < 0 || k > double(horizon)) return;
  const double dist = std::abs(e - energy_natural(p, int(k)));
  if (dist >= radius) return;
  const double en = p.scales.from_natural_energy(energy_natural(p, int(k)));
  char msg[160];
  std::snprintf(msg, sizeof msg, "energy within %.3g hbar*omega of pole n=%d (E_n = %.17g)", dist,
                int(k), en);
  throw PoleProximityError(msg, int(k), en, dist);
}

}  // namespace detail

/// Normalized bound state psi_n(x), real Legendre form; x in physical length.
inline double wavefn_legendre(const OscillatorParams& p, int n, double x) {
  if (n < 0) throw DomainError("wavefn: n must be >= 0");
  const double xt = p.scales.to_natural_length(x);
  return detail::wavefn_natural(p.gamma, n, xt) * p.scales.wavefn_scale();
}

/// Same state in Gegenbauer form including the (2i)^gamma phase; the ratio to
/// wavefn_legendre is exp(i pi gamma/2) for every x.
inline std::complex<double> wavefn_gegenbauer(const OscillatorParams& p, int n, double x) {
  if (n < 0) throw DomainError("wavefn: n must be >= 0");
  using specfun::ln_gamma;
  const double g = p.gamma;
  const double xt = p.scales.to_natural_length(x);
  const double lam = 1 + xt * xt;
  const double y = xt / std::sqrt(lam);
  const double nn = double(n);
  const double log_mag = 0.5 * (std::log(g + nn + 0.5) + ln_gamma(nn + 1).value -
                                ln_gamma(2 * g + nn + 1).value) +
                         g * std::numbers::ln2 + ln_gamma(g + 0.5).value -
                         0.5 * std::log(std::numbers::pi) - 0.5 * (g + 1.5) * std::log(lam);
  const double real_part = std::exp(log_mag) * specfun::gegenbauer_c(n, g + 0.5, y);
  const std::complex<double> phase = std::polar(1.0, std::numbers::pi * g / 2);  // i^gamma
  return phase * real_part * p.scales.wavefn_scale();
}

struct GreenOptions {
  double pole_radius = 1e-9;  // in hbar*omega
  int horizon = 100000;       // highest pole index checked
};

/// Closed-form Green's function G_E(x2, x1). The larger coordinate takes the
/// first Legendre factor, the smaller one the reflected factor.
inline double green_closed(const OscillatorParams& p, double E, double x2, double x1,
                           const GreenOptions& opt = {}) {
  using specfun::ln_gamma;
  const double e = std::abs(p.scales.to_natural_energy(E));
  detail::check_pole(p, e, opt.horizon, opt.pole_radius);
  const double g = p.gamma;
  const double l = -0.5 + e;
  const double a = p.scales.to_natural_length(std::max(x2, x1));
  const double b = p.scales.to_natural_length(std::min(x2, x1));
  const double lam_a = 1 + a * a, lam_b = 1 + b * b;
  const double ya = a / std::sqrt(lam_a);
  const double yb = -b / std::sqrt(lam_b);
  // P_l^{-g}(y) = [(1-y)/(1+y)]^{g/2} F(-l, l+1; 1+g; (1-y)/2) / Gamma(1+g);
  // the two 1/Gamma(1+g) are folded into the log prefactor.
  auto hat = [&](double y) {
    const double z = (1 - y) / 2;
    double f;
    try {
      f = specfun::gauss_2f1(-l, l + 1, 1 + g, z);
    } catch (const DegenerateTransformError&) {
      specfun::SeriesControl wide;
      wide.max_terms = 2000000;
      f = specfun::detail::hyp2f1_series(-l, l + 1, 1 + g, z, wide);
    }
    return std::pow((1 - y) / (1 + y), g / 2) * f;
  };
  const auto g1 = ln_gamma(g - l);
  const auto g2 = ln_gamma(1 + l + g);
  const double log_pref = g1.value + g2.value - 2 * ln_gamma(1 + g).value -
                          0.75 * (std::log(lam_a) + std::log(lam_b));
  const double value = -0.5 * double(g1.sign * g2.sign) * std::exp(log_pref) * hat(ya) * hat(yb);
  return value * p.scales.green_scale();
}

struct SpectralSum {
  double value = 0.0;
  double tail_estimate = 0.0;  // magnitude bound on the omitted terms
  double last_term = 0.0;
  int n_terms = 0;
  int monotone_from = 0;  // envelope of |terms| decreases from this index on
};

namespace detail {

// Tail bound from the decay of the term envelope: envelope maxima over the
// last two blocks give a power-law exponent p, and the remainder of a p-series
// starting at K is about env*K/(p-1).
inline void estimate_tail(const std::vector<double>& terms, SpectralSum& out) {
  const int K = int(terms.size());
  out.n_terms = K;
  out.last_term = K > 0 ? terms.back() : 0.0;
  if (K < 8) {
    out.tail_estimate = K > 0 ? std::abs(terms.back()) : 0.0;
    return;
  }
  const int block = std::max(2, K / 8);
  auto env = [&](int lo, int hi) {
    double m = 0;
    for (int i = lo; i < hi; ++i) m = std::max(m, std::abs(terms[std::size_t(i)]));
    return m;
  };
  const double e2 = env(K - block, K);
  const double e1 = env(K - 2 * block, K - block);
  const double k2 = K - block / 2.0, k1 = K - 1.5 * block;
  double pexp = (e1 > 0 && e2 > 0) ? std::log(e1 / e2) / std::log(k2 / k1) : 0.0;
  if (pexp > 1.05) out.tail_estimate = e2 * double(K) / (pexp - 1.0);
  else out.tail_estimate = e2 * double(K);
  // Envelope monotone from: scan blocks backwards while the envelope keeps growing toward the front.
  int from = K - block;
  double prev = e2;
  for (int lo = K - 2 * block; lo >= 0; lo -= block) {
    const double e = env(lo, lo + block);
    if (!(e >= prev)) break;
    prev = e;
    from = lo;
  }
  out.monotone_from = from;
}

}  // namespace detail

/// Truncated bound-state sum sum_{n<n_terms} psi_n(x2) psi_n(x1) / (E^2 - E_n^2).
inline SpectralSum green_spectral(const OscillatorParams& p, double E, double x2, double x1,
                                  int n_terms, const GreenOptions& opt = {}) {
  if (n_terms < 1) throw DomainError("green_spectral: n_terms must be >= 1");
  const double e = p.scales.to_natural_energy(E);
  detail::check_pole(p, e, std::min(opt.horizon, n_terms - 1), opt.pole_radius);
  const auto a = detail::wavefn_sequence_natural(p.gamma, n_terms, p.scales.to_natural_length(x2));
  const auto b = detail::wavefn_sequence_natural(p.gamma, n_terms, p.scales.to_natural_length(x1));
  std::vector<double> terms(static_cast<std::size_t>(n_terms));
  double sum = 0;
  for (int n = 0; n < n_terms; ++n) {
    const double en = energy_natural(p, n);
    terms[std::size_t(n)] = a[std::size_t(n)] * b[std::size_t(n)] / (e * e - en * en);
    sum += terms[std::size_t(n)];
  }
  SpectralSum out;
  detail::estimate_tail(terms, out);
  const double s = p.scales.green_scale();
  out.value = sum * s;
  out.tail_estimate *= s;
  out.last_term *= s;
  return out;
}

namespace detail {

// ||R||_2 / ||psi||_2 on the natural-unit grid [lo, hi] with spacing h, where
// R = -E^2 psi - Lambda (Lambda psi)'' + kappa Lambda psi + psi.
template <std::floating_point Real>
Real kg_residual_natural(Real gamma, Real kappa, int n, Real e, Real lo, Real hi, Real h) {
  const std::size_t m = std::size_t(std::floor((hi - lo) / h + Real(1e-9))) + 1;
  std::vector<Real> lam_psi(m + 4), psi(m + 4), lam(m + 4);
  for (std::size_t i = 0; i < m + 4; ++i) {
    const Real x = lo + (Real(i) - 2) * h;
    lam[i] = 1 + x * x;
    psi[i] = wavefn_natural<Real>(gamma, n, x);
    lam_psi[i] = lam[i] * psi[i];
  }
  Real r2 = 0, p2 = 0;
  for (std::size_t i = 2; i < m + 2; ++i) {
    const Real d2 = fd::second_derivative4(lam_psi, i, h);
    const Real r = -e * e * psi[i] - lam[i] * d2 + kappa * lam[i] * psi[i] + psi[i];
    r2 += r * r;
    p2 += psi[i] * psi[i];
  }
  return std::sqrt(r2 / p2);
}

inline ResidualReport kg_residual_report(const OscillatorParams& p, int n, const UniformGrid& grid,
                                         double e_nat) {
  if (n < 0) throw DomainError("kg_residual: n must be >= 0");
  grid.validate();
  using LD = long double;
  const LD lo = p.scales.to_natural_length(grid.lo);
  const LD hi = p.scales.to_natural_length(grid.hi);
  const LD h = p.scales.to_natural_length(grid.h);
  const double coarse = double(kg_residual_natural<LD>(p.gamma, p.kappa, n, e_nat, lo, hi, h));
  const double fine = double(kg_residual_natural<LD>(p.gamma, p.kappa, n, e_nat, lo, hi, h / 2));
  return adsosc::detail::make_residual_report(coarse, fine, double(h),
                                                 double(std::numeric_limits<LD>::epsilon()));
}

}  // namespace detail

/// Relative Klein-Gordon residual of psi_n with its own energy, at h and h/2.
inline ResidualReport kg_residual(const OscillatorParams& p, int n, const UniformGrid& grid) {
  return detail::kg_residual_report(p, n, grid, energy_natural(p, n));
}

/// Same residual with the energy replaced by E (physical units); used as a sensitivity probe.
inline ResidualReport kg_residual_at_energy(const OscillatorParams& p, int n, const UniformGrid& grid,
                                            double E) {
  return detail::kg_residual_report(p, n, grid, p.scales.to_natural_energy(E));
}

/// Harmonic-oscillator eigenfunction (M omega/pi hbar)^{1/4} (2^n n!)^{-1/2} e^{-M omega x^2/2hbar} H_n.
inline double nr_wavefn(const OscillatorParams& p, int n, double x) {
  if (n < 0) throw DomainError("nr_wavefn: n must be >= 0");
  if (!(p.N > 0)) throw ParameterError("nr_wavefn: the non-relativistic limit needs M > 0");
  const double xt = p.scales.to_natural_length(x);
  const double s = std::sqrt(p.N) * xt;  // sqrt(M omega/hbar) x
  const double log_pref = 0.25 * std::log(p.N / std::numbers::pi) -
                          0.5 * (double(n) * std::numbers::ln2 + specfun::ln_gamma(double(n) + 1).value) -
                          0.5 * s * s;
  return std::exp(log_pref) * specfun::hermite_h(n, s) * p.scales.wavefn_scale();
}

}  // namespace adsosc::oned
