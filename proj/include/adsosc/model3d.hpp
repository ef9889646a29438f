#pragma once

// (3+1)-dimensional relativistic oscillator, one angular-momentum channel at a
// time: spectrum, reduced radial wave functions Phi = r Psi, the closed and
// spectral radial Green's functions, the radial Klein-Gordon residual and the
// non-relativistic limit. Units as in model1d.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "adsosc/errors.hpp"
#include "adsosc/grid.hpp"
#include "adsosc/model1d.hpp"
#include "adsosc/params.hpp"
#include "adsosc/specfun.hpp"

namespace adsosc::threed {

struct RadialChannel {
  Scales scales;
  double xi = 0.0;
  double N = 0.0;
  int l = 0;
  double alpha = 0.0;  // 8 xi
  double beta = 0.25;  // 2 xi + 1/4
  double nu = 1.5;     // sqrt(N^2 - 2 beta - alpha + 11/4); equals gamma3
  double k = 0.5;      // l + 1/2
  double M1 = 1.0;
  double M2 = 0.5;

  double gamma3() const { return nu; }
  double length() const { return scales.length(); }
};

inline RadialChannel validate_channel(const RawParams& raw, int l) {
  if (l < 0) throw DomainError("validate_channel: l must be >= 0");
  RadialChannel ch;
  ch.scales = adsosc::detail::validate_scales(raw);
  ch.xi = raw.xi;
  ch.N = ch.scales.N();
  ch.l = l;
  const double disc = 9.0 + 4.0 * ch.N * ch.N - 48.0 * ch.xi;
  if (!(disc > 0))
    throw ParameterError("xi out of range: need xi < (9 + 4N^2)/48 = " +
                         std::to_string((9.0 + 4.0 * ch.N * ch.N) / 48.0));
  ch.alpha = 8.0 * ch.xi;
  ch.beta = 2.0 * ch.xi + 0.25;
  ch.nu = std::sqrt(ch.N * ch.N - 2.0 * ch.beta - ch.alpha + 2.75);
  ch.k = double(l) + 0.5;
  ch.M1 = 0.5 * (ch.nu + ch.k);
  ch.M2 = 0.5 * (ch.nu - ch.k);
  return ch;
}

/// beta_{n_r,l} = 2 n_r + l + gamma3 + 3/2 (energy in units of hbar omega).
inline double beta_nl(const RadialChannel& ch, int n_r) {
  return 2.0 * double(n_r) + double(ch.l) + ch.nu + 1.5;
}

inline double energy(const RadialChannel& ch, int n_r) {
  if (n_r < 0) throw DomainError("energy: n_r must be >= 0");
  return ch.scales.from_natural_energy(beta_nl(ch, n_r));
}

/// E'_PT in units of hbar^2 (natural-unit energy argument).
inline double e_pt(const RadialChannel& ch, double e_nat) {
  return (e_nat * e_nat + 4.0 * ch.beta - ch.alpha - 1.25) / 8.0;
}

/// L_E = -1/2 + sqrt(1/16 + 2 E'_PT).
inline double l_e(const RadialChannel& ch, double e_nat) {
  return -0.5 + std::sqrt(1.0 / 16.0 + 2.0 * e_pt(ch, e_nat));
}

/// Pole energy from M1 - L_E = -n_r solved through E'_PT (independent of beta_nl).
inline double pole_energy(const RadialChannel& ch, int n_r) {
  if (n_r < 0) throw DomainError("pole_energy: n_r must be >= 0");
  const double root = ch.M1 + double(n_r) + 0.5;
  const double ept = (root * root - 1.0 / 16.0) / 2.0;
  const double e2 = 8.0 * ept - 4.0 * ch.beta + ch.alpha + 1.25;
  return ch.scales.from_natural_energy(std::sqrt(e2));
}

namespace detail {

// Phi = exp(A) x^{l+1} Lambda^{n - beta_nl/2 - 1/2} P_n^{(l+1/2, nu)}(1 - 2z), z = x^2/Lambda,
// which is the terminating 2F1 form with F = n! Gamma(l+3/2)/Gamma(n+l+3/2) P_n.
template <std::floating_point Real>
Real log_amplitude(Real nu, int l, int n) {
  using specfun::ln_gamma;
  const Real nn = Real(n), ll = Real(l);
  const Real b = 2 * nn + ll + nu + Real(1.5);
  const Real ln_nfact = ln_gamma(nn + 1).value;
  const Real lg_nl = ln_gamma(nn + ll + Real(1.5)).value;
  const Real bracket =
      std::log(2 * b) + ln_gamma(b - nn).value + lg_nl - ln_nfact - ln_gamma(nn + nu + 1).value;
  return bracket / 2 + ln_nfact - lg_nl;
}

template <std::floating_point Real>
Real radial_natural(Real nu, int l, int n, Real x) {
  if (x == 0) return 0;
  const Real lam = 1 + x * x;
  const Real z = x * x / lam;
  const Real b = 2 * Real(n) + Real(l) + nu + Real(1.5);
  const Real jac = specfun::jacobi_p(n, Real(l) + Real(0.5), nu, 1 - 2 * z);
  return std::exp(log_amplitude(nu, l, n) + Real(l + 1) * std::log(x) +
                  (Real(n) - b / 2 - Real(0.5)) * std::log(lam)) *
         jac;
}

inline std::vector<double> radial_sequence_natural(double nu, int l, int count, double x) {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  if (count <= 0 || x == 0) return out;
  const double lam = 1 + x * x;
  const double z = x * x / lam;
  const auto jac = specfun::jacobi_p_sequence(count - 1, double(l) + 0.5, nu, 1 - 2 * z);
  for (int n = 0; n < count; ++n) {
    const double b = 2.0 * n + l + nu + 1.5;
    out[std::size_t(n)] = std::exp(log_amplitude(nu, l, n) + (l + 1) * std::log(x) +
                                   (n - b / 2 - 0.5) * std::log(lam)) *
                          jac[std::size_t(n)];
  }
  return out;
}

inline void check_pole(const RadialChannel& ch, double e_nat, int horizon, double radius) {
  const double e = std::abs(e_nat);
  const double k = std::round((e - beta_nl(ch, 0)) / 2.0);
  if (k < 0 || k > double(horizon)) return;
  const double dist = std::abs(e - beta_nl(ch, int(k)));
  if (dist >= radius) return;
  const double en = ch.scales.from_natural_energy(beta_nl(ch, int(k)));
  char msg[160];
  std::snprintf(msg, sizeof msg, "energy within %.3g hbar*omega of pole n_r=%d (E_n_r = %.17g)", dist,
                int(k), en);
  throw PoleProximityError(msg, int(k), en, dist);
}

inline double gauss_or_series(double a, double b, double c, double z) {
  try {
    return specfun::gauss_2f1(a, b, c, z);
  } catch (const DegenerateTransformError&) {
    specfun::SeriesControl wide;
    wide.max_terms = 2000000;
    return specfun::detail::hyp2f1_series(a, b, c, z, wide);
  }
}

}  // namespace detail

/// Normalized reduced radial function Phi_{n_r,l}(r), int_0^inf Phi^2 dr = 1.
inline double radial_wavefn(const RadialChannel& ch, int n_r, double r) {
  if (n_r < 0) throw DomainError("radial_wavefn: n_r must be >= 0");
  if (r < 0) throw DomainError("radial_wavefn: r must be >= 0");
  return detail::radial_natural(ch.nu, ch.l, n_r, ch.scales.to_natural_length(r)) *
         ch.scales.wavefn_scale();
}

/// Jacobi form with argument 1 + 2 omega^2 r^2/c^2 and the prefactor's gamma read as gamma3.
inline double radial_wavefn_jacobi(const RadialChannel& ch, int n_r, double r) {
  if (n_r < 0) throw DomainError("radial_wavefn_jacobi: n_r must be >= 0");
  if (r < 0) throw DomainError("radial_wavefn_jacobi: r must be >= 0");
  using specfun::ln_gamma;
  const double x = ch.scales.to_natural_length(r);
  if (x == 0) return 0.0;
  const double nn = n_r, b = beta_nl(ch, n_r);
  const double log_k = 0.5 * (std::log(2 * b) + ln_gamma(nn + 1).value + ln_gamma(b - nn).value -
                              ln_gamma(nn + ch.nu + 1).value - ln_gamma(nn + ch.l + 1.5).value);
  const double lam = 1 + x * x;
  const double jac = specfun::jacobi_p(n_r, ch.l + 0.5, -b, 1 + 2 * x * x);
  return std::exp(log_k + (ch.l + 1) * std::log(x) - (b / 2 + 0.5) * std::log(lam)) * jac *
         ch.scales.wavefn_scale();
}

using GreenOptions = oned::GreenOptions;
using SpectralSum = oned::SpectralSum;

/// Closed-form radial Green's function for r2 > r1 > 0, with u = ln(omega r/c).
inline double radial_green_closed(const RadialChannel& ch, double E, double r2, double r1,
                                  const GreenOptions& opt = {}) {
  if (!(r1 > 0)) throw DomainError("radial_green_closed: r1 must be > 0");
  if (!(r2 > r1)) throw OrderingError("radial_green_closed: requires r2 > r1");
  using specfun::ln_gamma;
  const double e = std::abs(ch.scales.to_natural_energy(E));
  detail::check_pole(ch, e, opt.horizon, opt.pole_radius);
  const double L = l_e(ch, e);
  const double a = ch.M1 - L, b = L + ch.M1 + 1;
  const double x2 = ch.scales.to_natural_length(r2), x1 = ch.scales.to_natural_length(r1);
  auto parts = [](double x) {
    struct P { double lam, cosh_u, up, dn; };  // (1+tanh u)/2, (1-tanh u)/2
    const double lam = 1 + x * x;
    return P{lam, 0.5 * (x + 1 / x), x * x / lam, 1 / lam};
  };
  const auto p1 = parts(x1), p2 = parts(x2);
  const auto g1 = ln_gamma(a), g2 = ln_gamma(b);
  double log_mag = g1.value + g2.value - ln_gamma(ch.M1 + ch.M2 + 1).value -
                   ln_gamma(ch.M1 - ch.M2 + 1).value -
                   0.5 * (std::log(p2.lam) + std::log(p1.lam) + std::log(p2.cosh_u) + std::log(p1.cosh_u));
  log_mag += 0.5 * (ch.M1 - ch.M2) * (std::log(p1.up) + std::log(p2.up)) +
             0.5 * (ch.M1 + ch.M2) * (std::log(p1.dn) + std::log(p2.dn));
  const double f1 = detail::gauss_or_series(a, b, ch.M1 - ch.M2 + 1, p1.up);
  const double f2 = detail::gauss_or_series(a, b, ch.M1 + ch.M2 + 1, p2.dn);
  const double value = -0.25 * double(g1.sign * g2.sign) * std::exp(log_mag) * f1 * f2;
  return value * ch.scales.green_scale();
}

/// Truncated sum over n_r < n_terms of Phi(r2) Phi(r1) / (E^2 - E_{n_r,l}^2).
inline SpectralSum radial_green_spectral(const RadialChannel& ch, double E, double r2, double r1,
                                         int n_terms, const GreenOptions& opt = {}) {
  if (n_terms < 1) throw DomainError("radial_green_spectral: n_terms must be >= 1");
  if (r1 < 0 || r2 < 0) throw DomainError("radial_green_spectral: r must be >= 0");
  const double e = ch.scales.to_natural_energy(E);
  detail::check_pole(ch, e, std::min(opt.horizon, n_terms - 1), opt.pole_radius);
  const auto a = detail::radial_sequence_natural(ch.nu, ch.l, n_terms, ch.scales.to_natural_length(r2));
  const auto b = detail::radial_sequence_natural(ch.nu, ch.l, n_terms, ch.scales.to_natural_length(r1));
  std::vector<double> terms(static_cast<std::size_t>(n_terms));
  double sum = 0;
  for (int n = 0; n < n_terms; ++n) {
    const double en = beta_nl(ch, n);
    terms[std::size_t(n)] = a[std::size_t(n)] * b[std::size_t(n)] / (e * e - en * en);
    sum += terms[std::size_t(n)];
  }
  SpectralSum out;
  oned::detail::estimate_tail(terms, out);
  const double s = ch.scales.green_scale();
  out.value = sum * s;
  out.tail_estimate *= s;
  out.last_term *= s;
  return out;
}

namespace detail {

// Radial operator on Psi = Phi/r:
// R = -E^2 Psi - Lambda r^{-2} (r^2 (Lambda Psi)')' + Lambda l(l+1)/r^2 Psi + U Psi,
// U = (2 + alpha - 4 beta) + (N^2 - 2 beta - alpha + 5/2) Lambda.
template <std::floating_point Real>
Real radial_residual_natural(const RadialChannel& ch, int n, Real e, Real lo, Real hi, Real h) {
  const Real nu = ch.nu;
  const Real u0 = Real(2) + Real(ch.alpha) - 4 * Real(ch.beta);
  const Real u1 = Real(ch.N) * Real(ch.N) - 2 * Real(ch.beta) - Real(ch.alpha) + Real(2.5);
  const Real ll = Real(ch.l) * Real(ch.l + 1);
  std::vector<Real> nodes;
  const std::size_t m = std::size_t(std::floor((hi - lo) / h + Real(1e-9))) + 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Real r = lo + Real(i) * h;
    if (r > 0) nodes.push_back(r);
  }
  if (nodes.size() < 4) throw DomainError("radial_kg_residual: grid has too few positive nodes");
  const std::size_t cnt = nodes.size();
  // samples at nodes[0] - 2h .. nodes.back() + 2h; only interior indices 4.. are used
  std::vector<Real> f(cnt + 4), psi(cnt + 4), lam(cnt + 4), rr(cnt + 4);
  for (std::size_t i = 0; i < cnt + 4; ++i) {
    const Real r = nodes[0] + (Real(i) - 2) * h;
    rr[i] = r;
    lam[i] = 1 + r * r;
    psi[i] = r > 0 ? radial_natural<Real>(nu, ch.l, n, r) / r : Real(0);
    f[i] = lam[i] * psi[i];
  }
  Real r2 = 0, p2 = 0;
  // skip the two innermost nodes (centrifugal singularity)
  for (std::size_t i = 4; i < cnt + 2; ++i) {
    const Real r = rr[i];
    const Real d2 = fd::second_derivative4(f, i, h);
    const Real d1 = fd::first_derivative4(f, i, h);
    const Real radial = d2 + 2 * d1 / r;
    const Real res = -e * e * psi[i] - lam[i] * radial + lam[i] * ll / (r * r) * psi[i] +
                     (u0 + u1 * lam[i]) * psi[i];
    // norms with the r^2 dr measure of the 3D inner product (|Psi|^2 r^2 dr = Phi^2 dr)
    r2 += res * res * r * r;
    p2 += psi[i] * psi[i] * r * r;
  }
  return std::sqrt(r2 / p2);
}

inline ResidualReport radial_residual_report(const RadialChannel& ch, int n, const UniformGrid& grid,
                                             double e_nat) {
  if (n < 0) throw DomainError("radial_kg_residual: n_r must be >= 0");
  grid.validate();
  if (grid.lo < 0) throw DomainError("radial_kg_residual: grid must lie in r >= 0");
  using LD = long double;
  const LD lo = ch.scales.to_natural_length(grid.lo);
  const LD hi = ch.scales.to_natural_length(grid.hi);
  const LD h = ch.scales.to_natural_length(grid.h);
  const double coarse = double(radial_residual_natural<LD>(ch, n, e_nat, lo, hi, h));
  const double fine = double(radial_residual_natural<LD>(ch, n, e_nat, lo, hi, h / 2));
  return adsosc::detail::make_residual_report(coarse, fine, double(h),
                                                 double(std::numeric_limits<LD>::epsilon()));
}

}  // namespace detail

/// Relative radial Klein-Gordon residual at h and h/2 (two innermost nodes excluded).
inline ResidualReport radial_kg_residual(const RadialChannel& ch, int n_r, const UniformGrid& grid) {
  return detail::radial_residual_report(ch, n_r, grid, beta_nl(ch, n_r));
}

inline ResidualReport radial_kg_residual_at_energy(const RadialChannel& ch, int n_r,
                                                   const UniformGrid& grid, double E) {
  return detail::radial_residual_report(ch, n_r, grid, ch.scales.to_natural_energy(E));
}

/// Reduced non-relativistic radial function r R_{n_r l}(r), normalized with plain dr.
inline double nr_radial_wavefn(const RadialChannel& ch, int n_r, double r) {
  if (n_r < 0) throw DomainError("nr_radial_wavefn: n_r must be >= 0");
  if (r < 0) throw DomainError("nr_radial_wavefn: r must be >= 0");
  if (!(ch.N > 0)) throw ParameterError("nr_radial_wavefn: the non-relativistic limit needs M > 0");
  using specfun::ln_gamma;
  const double x = ch.scales.to_natural_length(r);
  if (x == 0) return 0.0;
  const double c = ch.l + 1.5;
  const double s = ch.N * x * x;  // M omega r^2 / hbar
  const double log_pref = 0.5 * (std::log(2.0) + ln_gamma(n_r + c).value - ln_gamma(n_r + 1.0).value) +
                          0.5 * c * std::log(ch.N) + (ch.l + 1) * std::log(x) - ln_gamma(c).value -
                          0.5 * s;
  return std::exp(log_pref) * specfun::kummer_1f1(-double(n_r), c, s) * ch.scales.wavefn_scale();
}

}  // namespace adsosc::threed
