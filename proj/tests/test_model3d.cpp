#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "adsosc/model3d.hpp"
#include "oracles.hpp"

using namespace adsosc;

namespace {

threed::RadialChannel channel(double N, double xi, int l) {
  return threed::validate_channel(RawParams::from_N(N, xi), l);
}

// Overlap on (0, inf) with r = e^u, Simpson in u on [-30, 8].
template <class F>
double half_line(F&& f, int panels = 8000) {
  return double(oracle::simpson(
      [&](long double u) -> long double {
        const double r = double(std::exp(u));
        return f(r) * r;
      },
      -30.0L, 8.0L, panels));
}

}  // namespace

TEST(Model3d, ChannelParameters) {
  const auto ch = channel(1.0, 0.0, 0);
  EXPECT_DOUBLE_EQ(ch.alpha, 0.0);
  EXPECT_DOUBLE_EQ(ch.beta, 0.25);
  EXPECT_NEAR(ch.nu, std::sqrt(1 - 0.5 + 2.75), 1e-15);
  EXPECT_DOUBLE_EQ(ch.k, 0.5);
  EXPECT_NEAR(ch.M1 + ch.M2, ch.nu, 1e-15);
  EXPECT_NEAR(ch.M1 - ch.M2, ch.k, 1e-15);
  EXPECT_EQ(ch.gamma3(), ch.nu);
  // xi bound (9 + 4N^2)/48
  EXPECT_THROW(channel(1.0, 13.0 / 48.0, 0), ParameterError);
  EXPECT_NO_THROW(channel(1.0, 13.0 / 48.0 - 1e-3, 0));
  EXPECT_THROW(channel(1.0, 0.0, -1), DomainError);
}

TEST(Model3d, SpectrumExamples) {
  const auto ch = channel(1.0, 0.0, 0);
  EXPECT_NEAR(threed::energy(ch, 0), 3.3027756377, 1e-10);
  EXPECT_NEAR(threed::energy(ch, 1), 5.3027756377, 1e-10);
  // (2 n_r + l + 3/2 + sqrt(N^2 - 12 xi + 9/4)) by hand
  const auto c2 = channel(2.0, 0.1, 2);
  EXPECT_NEAR(threed::energy(c2, 3), 6 + 2 + 1.5 + std::sqrt(4 - 1.2 + 2.25), 1e-13);
}

TEST(Model3d, Degeneracy) {
  for (double N : {0.0, 1.0, 5.0}) {
    for (int l = 0; l <= 3; ++l)
      for (int n = 1; n <= 4; ++n)
        EXPECT_DOUBLE_EQ(threed::energy(channel(N, 0.0, l), n), threed::energy(channel(N, 0.0, l + 2), n - 1));
  }
}

TEST(Model3d, EnergyParametersAtPoles) {
  // M1 - L_E = -n_r at E = E_{n_r,l}
  const auto ch = channel(1.5, 0.05, 1);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_NEAR(ch.M1 - threed::l_e(ch, threed::beta_nl(ch, n)), -double(n), 1e-12);
    EXPECT_NEAR(threed::pole_energy(ch, n), threed::energy(ch, n), 1e-12);
  }
}

TEST(Model3d, SmallRBehaviour) {
  for (int l = 0; l <= 3; ++l) {
    const auto ch = channel(1.0, 0.0, l);
    EXPECT_EQ(threed::radial_wavefn(ch, 1, 0.0), 0.0);
    // d ln Phi / d ln r -> l + 1
    const double r1 = 1e-5, r2 = 2e-5;
    const double slope = std::log(threed::radial_wavefn(ch, 0, r2) / threed::radial_wavefn(ch, 0, r1)) / std::log(2.0);
    EXPECT_NEAR(slope, l + 1.0, 1e-6) << l;
  }
  EXPECT_THROW(threed::radial_wavefn(channel(1, 0, 0), 0, -0.1), DomainError);
}

TEST(Model3d, OrthonormalChannels) {
  for (int l = 0; l <= 2; ++l) {
    const auto ch = channel(1.0, 0.1, l);
    for (int n = 0; n <= 4; ++n)
      for (int m = n; m <= 4; ++m) {
        const double g = half_line([&](double r) { return threed::radial_wavefn(ch, n, r) * threed::radial_wavefn(ch, m, r); });
        EXPECT_NEAR(g, n == m ? 1.0 : 0.0, 1e-9) << "l=" << l << " " << n << "," << m;
      }
  }
}

TEST(Model3d, JacobiFormIsProportional) {
  for (int l = 0; l <= 2; ++l) {
    const auto ch = channel(2.0, 0.2, l);
    for (int n = 0; n <= 4; ++n)
      for (double r : {0.2, 0.9, 2.4}) {
        const double phi = threed::radial_wavefn(ch, n, r);
        if (std::abs(phi) < 1e-6) continue;
        EXPECT_NEAR(threed::radial_wavefn_jacobi(ch, n, r) / phi, 1.0, 1e-10);
      }
  }
}

TEST(Model3d, ReducedRadialEquationByFiniteDifferences) {
  // Independent check written directly in Phi: with Psi = Phi/r and
  // f = Lambda Psi, R = -E^2 Psi - Lambda (f'' + 2 f'/r) + Lambda l(l+1)/r^2 Psi + U Psi.
  const auto ch = channel(1.0, 0.05, 1);
  const double u0 = 2 + ch.alpha - 4 * ch.beta;
  const double u1 = ch.N * ch.N - 2 * ch.beta - ch.alpha + 2.5;
  for (int n = 0; n <= 2; ++n) {
    const double e = threed::energy(ch, n);
    auto psi = [&](double r) { return threed::radial_wavefn(ch, n, r) / r; };
    auto f = [&](double r) { return (1 + r * r) * psi(r); };
    const double h = 2e-3;
    for (double r : {0.3, 0.8, 1.5, 2.5}) {
      const double lam = 1 + r * r;
      const double fp1 = f(r + h), fm1 = f(r - h), fp2 = f(r + 2 * h), fm2 = f(r - 2 * h);
      const double f2 = (-fp2 + 16 * fp1 - 30 * f(r) + 16 * fm1 - fm2) / (12 * h * h);
      const double f1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
      const double res = -e * e * psi(r) - lam * (f2 + 2 * f1 / r) + lam * 2.0 / (r * r) * psi(r) + (u0 + u1 * lam) * psi(r);
      EXPECT_LT(std::abs(res), 1e-7 * (1 + std::abs(lam * lam * psi(r)))) << "n=" << n << " r=" << r;
    }
  }
}

TEST(Model3d, KleinGordonResidual) {
  UniformGrid grid{0, 8, 0.005};
  for (int l = 0; l <= 2; ++l) {
    const auto ch = channel(1.0, 0.0, l);
    for (int n = 0; n <= 2; ++n) {
      const auto r = threed::radial_kg_residual(ch, n, grid);
      EXPECT_LT(r.residual, 1e-5);
      if (r.resolved) EXPECT_NEAR(r.order, 4.0, 0.3) << "l=" << l << " n=" << n;
      const auto wrong = threed::radial_kg_residual_at_energy(ch, n, grid, threed::energy(ch, n) + 0.1);
      EXPECT_GT(wrong.residual, 1e3 * std::max(r.residual, 1e-12));
    }
  }
}

TEST(Model3d, GreenResidueAndOrdering) {
  const auto ch = channel(1.0, 0.0, 1);
  for (int n = 0; n <= 2; ++n) {
    const double en = threed::energy(ch, n);
    auto scaled = [&](double e) { return (e * e - en * en) * threed::radial_green_closed(ch, e, 1.1, 0.4); };
    const double lhs = 0.5 * (scaled(en + 1e-5) + scaled(en - 1e-5));
    const double rhs = threed::radial_wavefn(ch, n, 1.1) * threed::radial_wavefn(ch, n, 0.4);
    EXPECT_NEAR(lhs, rhs, 1e-6 * std::abs(rhs) + 1e-9) << n;
  }
  EXPECT_THROW(threed::radial_green_closed(ch, 0.5, 0.4, 1.1), OrderingError);
  EXPECT_THROW(threed::radial_green_closed(ch, 0.5, 0.4, 0.4), OrderingError);
  EXPECT_THROW(threed::radial_green_closed(ch, 0.5, 0.4, 0.0), DomainError);
  EXPECT_DOUBLE_EQ(threed::radial_green_closed(ch, 0.5, 1.1, 0.4), threed::radial_green_closed(ch, -0.5, 1.1, 0.4));
}

TEST(Model3d, GreenSpectralSumConverges) {
  const auto ch = channel(1.0, 0.0, 0);
  const double closed = threed::radial_green_closed(ch, 1.0, 0.9, 0.4);
  const auto s60 = threed::radial_green_spectral(ch, 1.0, 0.9, 0.4, 60);
  const auto s4000 = threed::radial_green_spectral(ch, 1.0, 0.9, 0.4, 4000);
  EXPECT_LT(std::abs(s4000.value - closed), std::abs(s60.value - closed));
  EXPECT_LT(std::abs(s4000.value / closed - 1), 1e-5);
}

TEST(Model3d, PoleProximityNamesTheState) {
  const auto ch = channel(1.0, 0.0, 2);
  try {
    threed::radial_green_closed(ch, threed::energy(ch, 1), 1.0, 0.5);
    FAIL() << "expected PoleProximityError";
  } catch (const PoleProximityError& e) {
    EXPECT_EQ(e.nearest_index(), 1);
    EXPECT_DOUBLE_EQ(e.nearest_energy(), threed::energy(ch, 1));
    EXPECT_EQ(e.distance(), 0.0);
  }
}

TEST(Model3d, NonRelativisticLimit) {
  // 3D oscillator ground state r R_00 = 2 (N^3/pi)^{1/4} r e^{-N r^2/2}
  const auto big = channel(300.0, 0.0, 0);
  for (double r : {0.01, 0.05, 0.1})
    EXPECT_NEAR(threed::nr_radial_wavefn(big, 0, r),
                2 * std::pow(std::pow(300.0, 3) / std::numbers::pi, 0.25) * r * std::exp(-150 * r * r), 1e-10);
  double prev = 1e300;
  for (double N : {1e2, 1e3, 1e4}) {
    const auto ch = channel(N, 0.0, 1);
    double d = 0, m = 0;
    for (int i = 1; i <= 300; ++i) {
      const double r = i * 0.02 / std::sqrt(N);
      d = std::max(d, std::abs(threed::radial_wavefn(ch, 1, r) - threed::nr_radial_wavefn(ch, 1, r)));
      m = std::max(m, std::abs(threed::nr_radial_wavefn(ch, 1, r)));
    }
    EXPECT_LT(d / m, prev);
    prev = d / m;
  }
  EXPECT_LT(prev, 1e-2);
}
