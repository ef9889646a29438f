#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "adsosc/model1d.hpp"
#include "oracles.hpp"

using namespace adsosc;

namespace {

oned::OscillatorParams natural(double N, double xi = 0.0) { return oned::validate(RawParams::from_N(N, xi)); }

// Overlap on the real line through x = tan(theta), Simpson in theta.
template <class F>
double real_line(F&& f, int panels = 4000) {
  const long double h = std::numbers::pi_v<long double> / 2;
  return double(oracle::simpson(
      [&](long double th) -> long double {
        const long double c = std::cos(th);
        if (c <= 1e-12L) return 0;
        return f(double(std::tan(th))) / (c * c);
      },
      -h, h, panels));
}

}  // namespace

TEST(Model1d, Parameters) {
  const auto p = natural(1.0, 0.1);
  EXPECT_DOUBLE_EQ(p.alpha, 2.2);
  EXPECT_DOUBLE_EQ(p.beta, 0.6);
  EXPECT_NEAR(p.gamma, 0.5 * std::sqrt(1 + 4 - 0.8), 1e-15);
  EXPECT_NEAR(p.kappa, 1 + 1 - 1.2, 1e-15);
  EXPECT_THROW(natural(1.0, 0.625), ParameterError);
  EXPECT_NO_THROW(natural(1.0, 0.62));
  RawParams bad = RawParams::from_N(1, 0);
  bad.c = -1;
  EXPECT_THROW(oned::validate(bad), ParameterError);
  bad = RawParams::from_N(1, 0);
  bad.omega = std::nan("");
  EXPECT_THROW(oned::validate(bad), ParameterError);
}

TEST(Model1d, SpectrumExamples) {
  const auto p0 = natural(0.0);
  for (int n = 0; n <= 3; ++n) EXPECT_NEAR(oned::energy(p0, n), n + 1.0, 1e-14);
  const auto p1 = natural(1.0);
  EXPECT_NEAR(oned::energy(p1, 0), 1.6180339887, 1e-10);
  EXPECT_NEAR(oned::energy(p1, 1), 2.6180339887, 1e-10);
  EXPECT_THROW(oned::energy(p1, -1), DomainError);
  // equally spaced by hbar omega
  const auto p = natural(5.0, 0.5);
  for (int n = 0; n < 10; ++n) EXPECT_NEAR(oned::energy(p, n + 1) - oned::energy(p, n), 1.0, 1e-12);
}

TEST(Model1d, PhysicalUnits) {
  RawParams raw;
  raw.omega = 2.0;
  raw.c = 3.0;
  raw.hbar = 0.5;
  raw.mass = 1.0 / 9.0;  // N = M c^2 / (hbar omega) = 1
  const auto p = oned::validate(raw);
  const auto q = natural(1.0);
  EXPECT_NEAR(p.N, 1.0, 1e-15);
  EXPECT_NEAR(p.length(), 1.5, 1e-15);
  EXPECT_NEAR(oned::energy(p, 2), oned::energy(q, 2) * 1.0, 1e-14);  // hbar omega = 1
  const double L = 1.5;
  for (double x : {-2.0, 0.3, 1.7})
    EXPECT_NEAR(oned::wavefn_legendre(p, 1, x), oned::wavefn_legendre(q, 1, x / L) / std::sqrt(L), 1e-14);
  const double norm = real_line([&](double x) { return std::pow(oned::wavefn_legendre(p, 3, x), 2); });
  EXPECT_NEAR(norm, 1.0, 1e-9);
  const double gs = 1.0 / (0.25 * 2.0 * 3.0);
  EXPECT_NEAR(oned::green_closed(p, 0.7, 0.4, -0.9), oned::green_closed(q, 0.7, 0.4 / L, -0.9 / L) * gs, 1e-14);
}

TEST(Model1d, WavefunctionMatchesFerrersFunction) {
  // psi_n is proportional to Lambda^{-3/4} P_{gamma+n}^{-gamma}(x/sqrt(Lambda)),
  // evaluated here through the hypergeometric Legendre route
  for (double N : {0.3, 1.0, 2.7}) {
    const auto p = natural(N, 0.05);
    for (int n = 0; n <= 6; ++n) {
      double first = 0.0;
      for (double x : {-1.9, -0.8, -0.35, 0.6, 1.4, 3.0}) {
        const double lam = 1 + x * x;
        const double ref = std::pow(lam, -0.75) * specfun::legendre_p(p.gamma + n, -p.gamma, x / std::sqrt(lam));
        if (std::abs(ref) < 1e-4) continue;
        const double ratio = oned::wavefn_legendre(p, n, x) / ref;
        if (first == 0.0) first = ratio;
        EXPECT_NEAR(ratio / first, 1.0, 1e-9) << "N=" << N << " n=" << n << " x=" << x;
      }
    }
  }
}

TEST(Model1d, OrthonormalAndParity) {
  const auto p = natural(1.0, 0.1);
  for (int n = 0; n <= 5; ++n) {
    for (int m = n; m <= 5; ++m) {
      const double g = real_line([&](double x) { return oned::wavefn_legendre(p, n, x) * oned::wavefn_legendre(p, m, x); });
      EXPECT_NEAR(g, n == m ? 1.0 : 0.0, 1e-9) << n << "," << m;
    }
    for (double x : {0.2, 0.9, 2.5})
      EXPECT_NEAR(oned::wavefn_legendre(p, n, -x), (n % 2 ? -1 : 1) * oned::wavefn_legendre(p, n, x), 1e-14);
  }
}

TEST(Model1d, GegenbauerFormHasConstantUnitPhase) {
  const auto p = natural(1.0);
  const auto expected = std::polar(1.0, std::numbers::pi * p.gamma / 2);
  for (int n = 0; n <= 4; ++n)
    for (double x : {-1.3, 0.4, 2.2}) {
      const double psi = oned::wavefn_legendre(p, n, x);
      if (std::abs(psi) < 1e-6) continue;
      EXPECT_LT(std::abs(oned::wavefn_gegenbauer(p, n, x) / psi - expected), 1e-12);
    }
}

TEST(Model1d, KleinGordonResidual) {
  const auto p = natural(1.0);
  UniformGrid grid{-8, 8, 0.005};
  for (int n = 0; n <= 4; ++n) {
    const auto r = oned::kg_residual(p, n, grid);
    EXPECT_LT(r.residual, 1e-5) << n;
    ASSERT_TRUE(r.resolved);
    EXPECT_NEAR(r.order, 4.0, 0.3) << n;
    const auto wrong = oned::kg_residual_at_energy(p, n, grid, oned::energy(p, n) + 0.1);
    EXPECT_GT(wrong.residual, 1e3 * r.residual);
  }
  // the N = 0 ground state is reproduced exactly by the stencil
  const auto exact = oned::kg_residual(natural(0.0), 0, grid);
  EXPECT_LT(exact.residual, 1e-10);
  EXPECT_FALSE(exact.resolved);
  EXPECT_THROW(oned::kg_residual(p, 0, UniformGrid{0, 1, 0.5}), DomainError);
}

TEST(Model1d, GreenSymmetries) {
  const auto p = natural(1.0);
  for (double E : {0.4, 2.1, 3.9}) {
    EXPECT_DOUBLE_EQ(oned::green_closed(p, E, 0.7, -0.2), oned::green_closed(p, E, -0.2, 0.7));
    EXPECT_DOUBLE_EQ(oned::green_closed(p, E, 0.7, -0.2), oned::green_closed(p, -E, 0.7, -0.2));
    // reflection x -> -x
    EXPECT_NEAR(oned::green_closed(p, E, 0.7, -0.2), oned::green_closed(p, E, -0.7, 0.2), 1e-13);
  }
}

TEST(Model1d, GreenResidueAtPole) {
  // (E^2 - E_n^2) G -> psi_n(x2) psi_n(x1) as E -> E_n; the symmetric pair
  // of offsets cancels the linear contribution of the regular part
  const auto p = natural(1.0, 0.1);
  for (int n = 0; n <= 2; ++n) {
    const double en = oned::energy(p, n);
    auto scaled = [&](double e) { return (e * e - en * en) * oned::green_closed(p, e, 0.5, -0.3); };
    const double lhs = 0.5 * (scaled(en + 1e-5) + scaled(en - 1e-5));
    const double rhs = oned::wavefn_legendre(p, n, 0.5) * oned::wavefn_legendre(p, n, -0.3);
    EXPECT_NEAR(lhs, rhs, 1e-6 * std::abs(rhs) + 1e-9) << n;
  }
}

TEST(Model1d, GreenDerivativeJump) {
  // away from x1 G solves the homogeneous equation; at x1 its slope jumps by 1/Lambda(x1)^2
  const auto p = natural(1.0);
  const double E = 0.8, x1 = 0.4, d = 1e-4;
  auto g = [&](double x) { return oned::green_closed(p, E, x, x1); };
  const double right = (-3 * g(x1) + 4 * g(x1 + d) - g(x1 + 2 * d)) / (2 * d);
  const double left = (3 * g(x1) - 4 * g(x1 - d) + g(x1 - 2 * d)) / (2 * d);
  const double lam = 1 + x1 * x1;
  EXPECT_NEAR(right - left, 1.0 / (lam * lam), 1e-6);
}

TEST(Model1d, GreenSpectralSumConverges) {
  const auto p = natural(1.0);
  const double closed = oned::green_closed(p, 0.9, 0.5, -0.3);
  const auto s60 = oned::green_spectral(p, 0.9, 0.5, -0.3, 60);
  const auto s4000 = oned::green_spectral(p, 0.9, 0.5, -0.3, 4000);
  EXPECT_LT(std::abs(s4000.value - closed), std::abs(s60.value - closed));
  EXPECT_LT(std::abs(s4000.value / closed - 1), 1e-5);
  EXPECT_EQ(s4000.n_terms, 4000);
  EXPECT_GT(s60.tail_estimate, 0.0);
  EXPECT_THROW(oned::green_spectral(p, 0.9, 0.5, -0.3, 0), DomainError);
}

TEST(Model1d, PoleProximity) {
  const auto p = natural(1.0);
  const double e2 = oned::energy(p, 2);
  try {
    oned::green_closed(p, e2 + 1e-12, 0.1, 0.2);
    FAIL() << "expected PoleProximityError";
  } catch (const PoleProximityError& e) {
    EXPECT_EQ(e.nearest_index(), 2);
    EXPECT_DOUBLE_EQ(e.nearest_energy(), e2);
  }
  EXPECT_THROW(oned::green_spectral(p, -e2, 0.1, 0.2, 10), PoleProximityError);
  EXPECT_NO_THROW(oned::green_closed(p, e2 + 1e-6, 0.1, 0.2));
}

TEST(Model1d, NonRelativisticLimit) {
  // ground state of the ordinary oscillator, written out
  const auto big = natural(400.0);
  for (double x : {0.0, 0.03, -0.07})
    EXPECT_NEAR(oned::nr_wavefn(big, 0, x), std::pow(400.0 / std::numbers::pi, 0.25) * std::exp(-200.0 * x * x), 1e-12);
  double prev = 1e300;
  for (double N : {1e2, 1e3, 1e4}) {
    const auto p = natural(N);
    double d = 0.0, m = 0.0;
    for (int i = -200; i <= 200; ++i) {
      const double x = i * 0.03 / std::sqrt(N);
      d = std::max(d, std::abs(oned::wavefn_legendre(p, 1, x) - oned::nr_wavefn(p, 1, x)));
      m = std::max(m, std::abs(oned::nr_wavefn(p, 1, x)));
    }
    EXPECT_LT(d / m, prev);
    prev = d / m;
  }
  EXPECT_LT(prev, 1e-3);
  EXPECT_THROW(oned::nr_wavefn(natural(0.0), 0, 0.1), ParameterError);
}
