#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "adsosc/fdoracle.hpp"

using namespace adsosc;
using namespace adsosc::fdoracle;

TEST(FdOracle, GridSpec) {
  GridSpec g;
  EXPECT_NO_THROW(g.validate());
  EXPECT_NEAR(g.node(0), g.u_min + g.spacing(), 1e-15);
  EXPECT_NEAR(g.refined().spacing(), g.spacing() / 2, 1e-15);
  EXPECT_THROW((GridSpec{-10, 10, 4000}.validate()), DomainError);
  EXPECT_THROW((GridSpec{-12, 12, 1999}.validate()), DomainError);
}

TEST(FdOracle, SturmCountOnDiagonalMatrix) {
  BandedOperator op{{1.0, 2.0, 3.0, 4.0}, {0.0, 0.0, 0.0}};
  EXPECT_EQ(sturm_count(op, 0.5), 0);
  EXPECT_EQ(sturm_count(op, 2.5), 2);
  EXPECT_EQ(sturm_count(op, 10.0), 4);
}

TEST(FdOracle, DiscreteBoxSpectrumIsExact) {
  // V = 0 on a Dirichlet grid: eigenvalues (1/h^2)(1 - cos(j pi/(n+1))), j = 1..n
  GridSpec g{-12, 12, 2000};
  const auto op = build_operator(EffectivePotential{}, g);
  const auto ev = lowest_eigenvalues(op, 6);
  const double h = g.spacing();
  for (int j = 1; j <= 6; ++j) {
    const double exact = (1 - std::cos(j * std::numbers::pi / (g.n_points + 1))) / (h * h);
    EXPECT_NEAR(ev[std::size_t(j - 1)], exact, 1e-12 * std::max(1.0, exact)) << j;
  }
  EXPECT_THROW(lowest_eigenvalues(op, 51), DomainError);
}

TEST(FdOracle, PoschlTellerBoundStates) {
  // -1/2 psi'' - lambda(lambda+1)/2 sech^2 u psi: E_n = -(lambda - n)^2 / 2
  const double lambda = 3.4;
  const EffectivePotential pot{0.0, 0.0, 0.5 * lambda * (lambda + 1)};
  GridSpec g{-40, 40, 16000};  // the n = 3 state decays only like e^{-0.4|u|}
  const auto coarse = lowest_eigenvalues(build_operator(pot, g), 4);
  const auto fine = lowest_eigenvalues(build_operator(pot, g.refined()), 4);
  for (int n = 0; n < 4; ++n) {
    const double exact = -0.5 * (lambda - n) * (lambda - n);
    const double rich = (4 * fine[std::size_t(n)] - coarse[std::size_t(n)]) / 3;
    EXPECT_NEAR(rich, exact, 1e-7) << n;
    EXPECT_LT(std::abs(rich - exact), std::abs(coarse[std::size_t(n)] - exact));
  }
}

TEST(FdOracle, RosenMorseBoundStates) {
  // -1/2 psi'' + (B tanh u - A sech^2 u) psi, A = s(s+1)/2:
  // E_n = -(s - n)^2/2 - B^2 / (2 (s - n)^2) for (s - n)^2 > |B|
  const double s = 4.2, B = 1.3;
  const EffectivePotential pot{0.0, B, 0.5 * s * (s + 1)};
  GridSpec g{-25, 25, 10000};
  const auto coarse = lowest_eigenvalues(build_operator(pot, g), 3);
  const auto fine = lowest_eigenvalues(build_operator(pot, g.refined()), 3);
  for (int n = 0; n < 3; ++n) {
    const double m = s - n;
    const double exact = -0.5 * m * m - B * B / (2 * m * m);
    EXPECT_NEAR((4 * fine[std::size_t(n)] - coarse[std::size_t(n)]) / 3, exact, 1e-7) << n;
  }
}

TEST(FdOracle, EffectivePotentialAsymptotics) {
  const auto ch = threed::validate_channel(RawParams::from_N(1.0, 0.0), 1);
  const auto pot = effective_potential_3d(ch, 2.0);
  // V(+inf) = nu^2/2, V(-inf) = k^2/2
  EXPECT_NEAR(pot.right_limit(), 0.5 * ch.nu * ch.nu, 1e-12);
  EXPECT_NEAR(pot.left_limit(), 0.5 * ch.k * ch.k, 1e-12);
  EXPECT_NEAR(pot(40.0), pot.right_limit(), 1e-12);
  const auto p = oned::validate(RawParams::from_N(1.0, 0.0));
  const auto p1 = effective_potential_1d(p, 1.0);
  EXPECT_NEAR(p1.left_limit(), p1.right_limit(), 0.0);
  EXPECT_NEAR(p1.right_limit(), 0.5 * p.gamma * p.gamma, 1e-12);
}

TEST(FdOracle, DefaultGridCoversSlowDecay) {
  // tiny decay rate needs a wide box
  const auto g = default_grid(EffectivePotential{0.02, 0.0, 1.0});
  EXPECT_GE(g.u_max, 17.0 / std::sqrt(0.04) - 1e-9);
  EXPECT_NO_THROW(g.validate());
  EXPECT_NEAR(g.spacing(), 0.01, 1e-3);
}

TEST(FdOracle, OneDimensionalEnergies) {
  for (auto [N, xi] : {std::pair{0.0, 0.0}, {1.0, 0.1}, {5.0, 0.5}}) {
    const auto p = oned::validate(RawParams::from_N(N, xi));
    for (int n = 0; n <= 3; ++n) {
      const auto r = oracle_energy_1d(p, n);
      EXPECT_NEAR(r.energy, oned::energy(p, n), 1e-6) << "N=" << N << " n=" << n;
      EXPECT_LT(std::abs(r.energy - oned::energy(p, n)), std::abs(r.coarse - oned::energy(p, n)));
      EXPECT_GT(r.bisections, 0);
    }
  }
}

TEST(FdOracle, RadialEnergies) {
  for (int l = 0; l <= 2; ++l) {
    const auto ch = threed::validate_channel(RawParams::from_N(1.0, 0.0), l);
    for (int n = 0; n <= 2; ++n) EXPECT_NEAR(oracle_energy_3d(ch, n).energy, threed::energy(ch, n), 1e-6);
  }
}

TEST(FdOracle, PhysicalUnits) {
  RawParams raw;
  raw.hbar = 2.0;
  raw.omega = 0.25;
  raw.mass = 0.5;  // N = M c^2 / (hbar omega) = 1, hbar omega = 0.5
  const auto p = oned::validate(raw);
  EXPECT_NEAR(oracle_energy_1d(p, 1).energy, oned::energy(p, 1), 1e-6 * 0.5);
  EXPECT_NEAR(oned::energy(p, 1), 0.5 * oned::energy(oned::validate(RawParams::from_N(1, 0)), 1), 1e-14);
}

TEST(FdOracle, RichardsonCanBeDisabled) {
  const auto p = oned::validate(RawParams::from_N(1.0, 0.0));
  OracleOptions opt;
  opt.richardson = false;
  const auto r = oracle_energy_1d(p, 0, opt);
  EXPECT_EQ(r.energy, r.coarse);
  EXPECT_NEAR(r.energy, oned::energy(p, 0), 1e-4);
  EXPECT_THROW(oracle_energy_1d(p, -1), DomainError);
}
