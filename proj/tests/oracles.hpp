#pragma once

// Reference values computed by routes that share no code with the library:
// Stirling series with downward recurrence, raw power series, explicit finite
// sums and coefficient tables, all in long double.

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

/// ln Gamma(x) for x > 0: Stirling series at x + shift, recurrence back down.
inline long double ln_gamma(long double x, int shift = 20) {
  long double z = x + shift;
  long double corr = 0;
  for (int i = 0; i < shift; ++i) corr += std::log(x + i);
  // Bernoulli terms B_{2k} / (2k (2k-1) z^{2k-1}), k = 1..8
  const long double b[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730, 7.0L / 6,
                           -3617.0L / 510};
  long double series = 0, zp = z;
  for (int k = 1; k <= 8; ++k) {
    series += b[k - 1] / ((2 * k) * (2 * k - 1) * zp);
    zp *= z * z;
  }
  const long double stirling = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * std::numbers::pi_v<long double>) + series;
  return stirling - corr;
}

inline long double gamma(long double x) { return std::exp(ln_gamma(x)); }

/// Raw 2F1 power series, summed until terms underflow the sum.
inline long double hyp2f1(long double a, long double b, long double c, long double z, int max_terms = 200000) {
  long double term = 1, sum = 1;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (term == 0 || std::abs(term) < 1e-22L * std::abs(sum)) break;
  }
  return sum;
}

/// C_n^lambda(t) = sum_k (-1)^k Gamma(n-k+lambda) / (Gamma(lambda) k! (n-2k)!) (2t)^{n-2k}.
inline long double gegenbauer(int n, long double lam, long double t) {
  long double s = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    long double num = 1;  // Gamma(n-k+lambda)/Gamma(lambda) = (lambda)_{n-k}
    for (int i = 0; i < n - k; ++i) num *= lam + i;
    long double den = std::tgamma((long double)(k + 1)) * std::tgamma((long double)(n - 2 * k + 1));
    s += (k % 2 ? -1 : 1) * num / den * std::pow(2 * t, n - 2 * k);
  }
  return s;
}

/// Physicists' Hermite polynomial from its explicit coefficient table.
inline long double hermite(int n, long double t) {
  // H_n(t) = n! sum_k (-1)^k (2t)^{n-2k} / (k! (n-2k)!)
  long double s = 0;
  for (int k = 0; 2 * k <= n; ++k)
    s += (k % 2 ? -1 : 1) * std::pow(2 * t, n - 2 * k) /
         (std::tgamma((long double)(k + 1)) * std::tgamma((long double)(n - 2 * k + 1)));
  return s * std::tgamma((long double)(n + 1));
}

/// Composite Simpson rule on [a, b] with an even number of panels.
template <class F>
long double simpson(F&& f, long double a, long double b, int panels) {
  if (panels % 2) ++panels;
  const long double h = (b - a) / panels;
  long double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

}  // namespace oracle
