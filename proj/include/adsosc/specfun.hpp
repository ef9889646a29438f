#pragma once

// Real-argument special functions: log-gamma, Gauss and Kummer hypergeometric
// series, Ferrers (associated Legendre) functions on the cut, and the
// classical orthogonal polynomials. All functions are pure and templated on
// the floating-point type so the same code serves double and long double.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "adsosc/errors.hpp"

namespace adsosc::specfun {

/// Truncation policy shared by every series evaluation.
struct SeriesControl {
  double tolerance = 1e-13;  // relative size of the last retained term
  int max_terms = 10000;

  void validate() const {
    if (!(tolerance > 0.0)) throw DomainError("SeriesControl: tolerance must be > 0");
    if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
  }
};

template <std::floating_point Real>
struct LogGamma {
  Real value;  // ln|Gamma(x)|
  int sign;    // sign of Gamma(x)
};

namespace detail {

template <std::floating_point Real>
bool is_nonpositive_integer(Real x) {
  return x <= 0 && x == std::floor(x);
}

// sin(pi x) with exact argument reduction; exactly zero at integers.
template <std::floating_point Real>
Real sin_pi(Real x) {
  Real r = std::fmod(x, Real(2));
  if (r > 1) r -= 2;
  if (r < -1) r += 2;
  if (r > Real(0.5)) r = 1 - r;
  else if (r < Real(-0.5)) r = -1 - r;
  return std::sin(std::numbers::pi_v<Real> * r);
}

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_coef = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

template <std::floating_point Real>
Real lanczos_ln_gamma(Real x) {  // x >= 0.5
  const Real z = x - 1;
  Real sum = Real(lanczos_coef[0]);
  for (std::size_t i = 1; i < lanczos_coef.size(); ++i) sum += Real(lanczos_coef[i]) / (z + Real(i));
  const Real t = z + Real(lanczos_g) + Real(0.5);
  const Real half_log_two_pi = Real(0.91893853320467274178032973640561764L);
  return half_log_two_pi + (z + Real(0.5)) * std::log(t) - t + std::log(sum);
}

}  // namespace detail

/// ln|Gamma(x)| and the sign of Gamma(x). Throws GammaPoleError at x = 0, -1, -2, ...
template <std::floating_point Real>
LogGamma<Real> ln_gamma(Real x) {
  if (std::isnan(x)) throw DomainError("ln_gamma: NaN argument");
  if (detail::is_nonpositive_integer(x))
    throw GammaPoleError("ln_gamma: pole at non-positive integer " + std::to_string(double(x)));
  if (x >= Real(0.5)) return {detail::lanczos_ln_gamma(x), 1};
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  const Real s = detail::sin_pi(x);
  const Real value =
      std::log(std::numbers::pi_v<Real>) - std::log(std::abs(s)) - detail::lanczos_ln_gamma(1 - x);
  return {value, s > 0 ? 1 : -1};
}

template <std::floating_point Real>
Real gamma(Real x) {
  const auto lg = ln_gamma(x);
  return Real(lg.sign) * std::exp(lg.value);
}

/// 1/Gamma(x); entire, zero at the poles of Gamma.
template <std::floating_point Real>
Real rgamma(Real x) {
  if (detail::is_nonpositive_integer(x)) return 0;
  const auto lg = ln_gamma(x);
  return Real(lg.sign) * std::exp(-lg.value);
}

/// prod Gamma(num_i) / prod Gamma(den_j), computed in log space.
/// Denominator poles make the ratio zero; numerator poles throw.
template <std::floating_point Real>
Real gamma_ratio(std::initializer_list<Real> num, std::initializer_list<Real> den) {
  for (Real d : den)
    if (detail::is_nonpositive_integer(d)) return 0;
  Real log_sum = 0;
  int sign = 1;
  for (Real n : num) {
    const auto lg = ln_gamma(n);
    log_sum += lg.value;
    sign *= lg.sign;
  }
  for (Real d : den) {
    const auto lg = ln_gamma(d);
    log_sum -= lg.value;
    sign *= lg.sign;
  }
  return Real(sign) * std::exp(log_sum);
}

namespace detail {

// Direct power series of 2F1 without any transformation. Polynomials (a or b
// a non-positive integer) are summed to their last term.
template <std::floating_point Real>
Real hyp2f1_series(Real a, Real b, Real c, Real z, const SeriesControl& ctl) {
  Real term = 1;
  Real sum = 1;
  int small_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const Real kk = Real(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1)) * z;
    sum += term;
    if (term == 0) return sum;
    if (std::abs(term) <= Real(ctl.tolerance) * std::abs(sum)) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within max_terms");
}

template <std::floating_point Real>
Real hyp2f1_polynomial(Real a, Real b, Real c, Real z, int degree) {
  Real term = 1;
  Real sum = 1;
  for (int k = 0; k < degree; ++k) {
    const Real kk = Real(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace detail

/// Gauss hypergeometric function F(a,b;c;z).
///
/// Terminating series (a or b a non-positive integer) are summed exactly for
/// any z. If c-a or c-b is a non-positive integer, Euler's transformation turns
/// the series into a polynomial. Otherwise z must lie in (-1,1): z < -1/2 goes
/// through Pfaff's transformation, z > 1/2 through the 1-z connection formula,
/// which is refused when c-a-b is within 1e-8 of an integer.
template <std::floating_point Real>
Real gauss_2f1(Real a, Real b, Real c, Real z, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(z))
    throw DomainError("gauss_2f1: NaN argument");

  if (b < a) std::swap(a, b);  // F is symmetric in (a, b); a fixed order makes it bitwise so
  const bool a_poly = detail::is_nonpositive_integer(a);
  const bool b_poly = detail::is_nonpositive_integer(b);
  if (a_poly || b_poly) {
    int degree = 0;
    if (a_poly && b_poly) degree = int(std::min(-a, -b));
    else degree = int(a_poly ? -a : -b);
    if (detail::is_nonpositive_integer(c) && -c < Real(degree))
      throw DomainError("gauss_2f1: c is a non-positive integer reached before termination");
    return detail::hyp2f1_polynomial(a, b, c, z, degree);
  }
  if (detail::is_nonpositive_integer(c))
    throw DomainError("gauss_2f1: c is a non-positive integer");
  if (z == 0) return 1;

  if (detail::is_nonpositive_integer(c - a) || detail::is_nonpositive_integer(c - b)) {
    if (!(z < 1)) throw DomainError("gauss_2f1: z must be < 1");
    return std::pow(1 - z, c - a - b) * gauss_2f1(c - a, c - b, c, z, ctl);
  }
  if (!(z > -1 && z < 1)) throw DomainError("gauss_2f1: z must lie in (-1, 1)");

  if (z < Real(-0.5)) {
    return std::pow(1 - z, -a) * detail::hyp2f1_series(a, c - b, c, z / (z - 1), ctl);
  }
  if (z <= Real(0.5)) return detail::hyp2f1_series(a, b, c, z, ctl);

  const Real d = c - a - b;
  if (std::abs(d - std::round(d)) < Real(1e-8))
    throw DegenerateTransformError("gauss_2f1: c-a-b is an integer; 1-z transformation is singular");
  const Real w = 1 - z;
  const Real first = gamma_ratio<Real>({c, d}, {c - a, c - b}) *
                     detail::hyp2f1_series(a, b, 1 - d, w, ctl);
  const Real second = gamma_ratio<Real>({c, -d}, {a, b}) * std::pow(w, d) *
                      detail::hyp2f1_series(c - a, c - b, 1 + d, w, ctl);
  return first + second;
}

/// Ferrers function P_nu^mu(y) on the cut, y in (-1,1):
/// [(1+y)/(1-y)]^{mu/2} F(-nu, nu+1; 1-mu; (1-y)/2) / Gamma(1-mu).
template <std::floating_point Real>
Real legendre_p(Real degree, Real order, Real y, const SeriesControl& ctl = {}) {
  if (!(y > -1 && y < 1)) throw DomainError("legendre_p: y must lie in (-1, 1)");
  const Real c = 1 - order;
  if (detail::is_nonpositive_integer(c))
    throw DomainError("legendre_p: 1-order is a non-positive integer");
  const Real z = (1 - y) / 2;
  Real f;
  try {
    f = gauss_2f1(-degree, degree + 1, c, z, ctl);
  } catch (const DegenerateTransformError&) {
    f = detail::hyp2f1_series(-degree, degree + 1, c, z, ctl);
  }
  return std::pow((1 + y) / (1 - y), order / 2) * f * rgamma(c);
}

/// Gegenbauer polynomial C_n^lambda(t) by the three-term recurrence.
template <std::floating_point Real>
Real gegenbauer_c(int n, Real lambda, Real t) {
  if (n < 0) throw DomainError("gegenbauer_c: n must be >= 0");
  if (!(lambda > Real(-0.5)) || lambda == 0)
    throw DomainError("gegenbauer_c: lambda must be > -1/2 and nonzero");
  Real prev = 1;
  if (n == 0) return prev;
  Real cur = 2 * lambda * t;
  for (int k = 1; k < n; ++k) {
    const Real kk = Real(k);
    const Real next = (2 * (kk + lambda) * t * cur - (kk + 2 * lambda - 1) * prev) / (kk + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Jacobi polynomial as the terminating sum
/// sum_k (-n)_k (n+a+b+1)_k (a+k+1)_{n-k} / (n! k!) ((1-x)/2)^k,
/// i.e. Gamma(n+a+1)/(n! Gamma(a+1)) F(-n, n+a+b+1; a+1; (1-x)/2) with the
/// Gamma ratio cancelled term by term so that no parameter value is singular.
template <std::floating_point Real>
Real jacobi_p_hypergeometric(int n, Real a, Real b, Real x) {
  if (n < 0) throw DomainError("jacobi_p: n must be >= 0");
  const Real z = (1 - x) / 2;
  // (a+k+1)_{n-k} for k = n .. 0, built from the top down.
  std::vector<Real> tail(static_cast<std::size_t>(n) + 1, Real(1));
  for (int k = n - 1; k >= 0; --k) tail[std::size_t(k)] = tail[std::size_t(k) + 1] * (a + Real(k) + 1);
  Real nfact = 1;
  for (int k = 2; k <= n; ++k) nfact *= Real(k);
  Real term = 1;  // (-n)_k (n+a+b+1)_k z^k / k!
  Real sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += term * tail[std::size_t(k)];
    const Real kk = Real(k);
    term *= (kk - Real(n)) * (Real(n) + a + b + 1 + kk) / (kk + 1) * z;
  }
  return sum / nfact;
}

/// P_0 .. P_nmax of the Jacobi family (a,b) at x, by the three-term recurrence.
/// Falls back to the terminating sum when a recurrence coefficient vanishes.
template <std::floating_point Real>
std::vector<Real> jacobi_p_sequence(int nmax, Real a, Real b, Real x) {
  if (nmax < 0) throw DomainError("jacobi_p: n must be >= 0");
  std::vector<Real> p(static_cast<std::size_t>(nmax) + 1);
  p[0] = 1;
  if (nmax == 0) return p;
  p[1] = (a + 1) + (a + b + 2) * (x - 1) / 2;
  for (int k = 1; k < nmax; ++k) {
    const Real kk = Real(k);
    const Real s = 2 * kk + a + b;
    const Real denom = 2 * (kk + 1) * (kk + a + b + 1) * s;
    if (std::abs(kk + a + b + 1) < Real(1e-12) || std::abs(s) < Real(1e-12)) {
      for (int j = k + 1; j <= nmax; ++j) p[std::size_t(j)] = jacobi_p_hypergeometric(j, a, b, x);
      return p;
    }
    const Real c1 = (s + 1) * ((s + 2) * s * x + a * a - b * b);
    const Real c2 = 2 * (kk + a) * (kk + b) * (s + 2);
    p[std::size_t(k) + 1] = (c1 * p[std::size_t(k)] - c2 * p[std::size_t(k) - 1]) / denom;
  }
  return p;
}

/// Jacobi polynomial P_n^{(a,b)}(x); any real x (arguments above 1 are allowed).
template <std::floating_point Real>
Real jacobi_p(int n, Real a, Real b, Real x) {
  if (n < 0) throw DomainError("jacobi_p: n must be >= 0");
  return jacobi_p_sequence(n, a, b, x).back();
}

/// Physicists' Hermite polynomial H_n(t).
template <std::floating_point Real>
Real hermite_h(int n, Real t) {
  if (n < 0) throw DomainError("hermite_h: n must be >= 0");
  Real prev = 1;
  if (n == 0) return prev;
  Real cur = 2 * t;
  for (int k = 1; k < n; ++k) {
    const Real next = 2 * t * cur - 2 * Real(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Confluent hypergeometric M(a; c; z). Terminating when a = -n; otherwise
/// negative z goes through Kummer's transformation e^z M(c-a; c; -z).
template <std::floating_point Real>
Real kummer_1f1(Real a, Real c, Real z, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (std::isnan(a) || std::isnan(c) || std::isnan(z)) throw DomainError("kummer_1f1: NaN argument");
  if (detail::is_nonpositive_integer(a)) {
    const int degree = int(-a);
    if (detail::is_nonpositive_integer(c) && -c < Real(degree))
      throw DomainError("kummer_1f1: c is a non-positive integer reached before termination");
    Real term = 1;
    Real sum = 1;
    for (int k = 0; k < degree; ++k) {
      const Real kk = Real(k);
      term *= (a + kk) / ((c + kk) * (kk + 1)) * z;
      sum += term;
    }
    return sum;
  }
  if (detail::is_nonpositive_integer(c)) throw DomainError("kummer_1f1: c is a non-positive integer");
  if (z < 0) return std::exp(z) * kummer_1f1(c - a, c, -z, ctl);
  Real term = 1;
  Real sum = 1;
  int small_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const Real kk = Real(k);
    term *= (a + kk) / ((c + kk) * (kk + 1)) * z;
    sum += term;
    if (term == 0) return sum;
    if (std::abs(term) <= Real(ctl.tolerance) * std::abs(sum)) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("kummer_1f1: series did not converge within max_terms");
}

/// Principal-branch power w^p of a real base, as a complex number.
template <std::floating_point Real>
std::complex<Real> principal_pow(Real w, Real p) {
  if (w >= 0) return {std::pow(w, p), Real(0)};
  const Real mag = std::pow(-w, p);
  const Real phase = std::numbers::pi_v<Real> * p;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace adsosc::specfun
