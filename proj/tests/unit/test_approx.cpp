#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hcross/approx.hpp"
#include "hcross/errors.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/random_poly.hpp"
#include "test_support.hpp"

using namespace hcross;

namespace {

MajorantParams make(int d, double r, std::vector<double> b, int l = 2) {
  MajorantParams p;
  p.d = d;
  p.r = r;
  p.b = std::move(b);
  p.l = l;
  return p;
}

std::vector<ExperimentRecord> synthetic(double rho, double lambda, double noise, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-noise, noise);
  std::vector<ExperimentRecord> out;
  for (int e = 4; e <= 40; ++e) {
    ExperimentRecord r;
    r.M = std::ldexp(1.0, e);
    r.error = std::pow(r.M, -rho) * std::pow(e, lambda) * (1.0 + u(rng));
    out.push_back(r);
  }
  return out;
}

RateExperiment shell_experiment(std::vector<double> b, double theta) {
  RateExperiment exp;
  exp.family = Family::shell;
  exp.omega = make(2, 1.5, std::move(b));
  exp.bp.p = 2.0;
  exp.bp.theta = theta;
  exp.q = 2.0;
  exp.N_grid = octave_grid(256.0, 4096.0);
  exp.samples = 2;
  exp.seed = 5;
  return exp;
}

}  // namespace

TEST(ProjectQ, Example) {
  const auto omega = make(1, 1.0, {0.0});
  const auto f = TrigPolynomial::from_terms(1, {{{1}, 1.0}, {{12}, 1.0}});
  EXPECT_EQ(project_q(f, omega, 8.0), TrigPolynomial::monomial({1}));
  EXPECT_NEAR(approx_error(f, omega, 8.0, 2.0), 1.0, 1e-15);
  EXPECT_NEAR(approx_error(f, omega, 8.0, kInfinity), 1.0, 1e-12);
}

TEST(ProjectQ, IdempotentAndContractive) {
  const auto omega = make(2, 1.5, {0.5, 0.25});
  const auto f = hcross::testing::random_poly(2, 200, 40, 3);
  for (double N : {10.0, 100.0, 1000.0}) {
    const auto p = project_q(f, omega, N);
    EXPECT_EQ(project_q(p, omega, N), p);
    EXPECT_LE(p.l2_norm_squared(), f.l2_norm_squared());
    EXPECT_NEAR(approx_error(p, omega, N, 2.0), 0.0, 0.0);
    EXPECT_NEAR(approx_error(p, omega, N, 1.5), 0.0, 0.0);
  }
}

TEST(ProjectQ, LinearInF) {
  const auto omega = make(2, 1.0, {0.0, 0.0});
  const auto f = hcross::testing::random_poly(2, 80, 30, 1);
  const auto g = hcross::testing::random_poly(2, 80, 30, 2);
  const auto lhs = project_q(f + Complex(2.0) * g, omega, 64.0);
  const auto rhs = project_q(f, omega, 64.0) + Complex(2.0) * project_q(g, omega, 64.0);
  ASSERT_EQ(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_NEAR(std::abs(lhs.coefficient(i) - rhs.coefficient(i)), 0.0, 1e-14);
}

TEST(ApproxError, ParsevalTail) {
  const auto omega = make(2, 1.5, {0.5, 0.25});
  const auto f = hcross::testing::random_poly(2, 300, 60, 7);
  QuadratureSpec grid;
  grid.mode = QuadratureMode::even_power_exact;
  for (double N : {20.0, 300.0, 3000.0}) {
    const auto q = q_set(omega, N);
    double tail = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!q.contains(f.frequency(i))) tail += std::norm(f.coefficient(i));
    }
    const double exact = std::sqrt(tail);
    EXPECT_NEAR(approx_error(f, omega, N, 2.0), exact, 1e-12 * exact) << N;
    EXPECT_NEAR(approx_error(f, omega, N, 2.0, grid), exact, 1e-10 * exact) << N;
  }
}

TEST(ApproxError, SingleSurvivingCoefficient) {
  const auto omega = make(1, 1.0, {0.0});
  const double N = 8.0;
  const auto g = TrigPolynomial::monomial({12}, 1.0 / N);
  // k = 12 lies in rho(4), outside Q(N') for every N' < 16.
  for (double Np : {4.0, 8.0, 15.0}) EXPECT_NEAR(approx_error(g, omega, Np, 2.0), 1.0 / N, 1e-16) << Np;
  EXPECT_EQ(approx_error(g, omega, 16.0, 2.0), 0.0);
}

TEST(ApproxError, MonotoneInN) {
  const auto omega = make(2, 1.5, {0.5, 0.25});
  const auto f = hcross::testing::random_poly(2, 150, 50, 9);
  for (double q : {1.5, 2.0}) {
    double prev = kInfinity;
    for (double N = 4.0; N <= 1e5; N *= 2.0) {
      const double e = approx_error(f, omega, N, q);
      EXPECT_LE(e, prev * (1 + 1e-6)) << "q=" << q << " N=" << N;
      prev = e;
    }
  }
}

TEST(Regime, Classification) {
  const auto omega = make(2, 1.5, {0.0, 0.0});
  EXPECT_EQ(classify_regime(omega, 2.0, 2.0, 2.0).tag, RegimeTag::T31);
  EXPECT_EQ(classify_regime(omega, 4.0, 1.0, 2.0).tag, RegimeTag::T31);
  EXPECT_EQ(classify_regime(omega, 1.5, 1.0, 2.0).tag, RegimeTag::T32);
  EXPECT_EQ(classify_regime(omega, 1.0, kInfinity, 2.0).tag, RegimeTag::T33);
  EXPECT_THROW(classify_regime(omega, 1.0, 1.0, 2.0), UnsupportedRegime);
  EXPECT_THROW(classify_regime(omega, 2.0, 3.0, 2.0), UnsupportedRegime);
  EXPECT_THROW(classify_regime(omega, 2.0, 2.0, kInfinity), UnsupportedRegime);
  EXPECT_THROW(classify_regime(omega, kInfinity, 2.0, 2.0), UnsupportedRegime);
  EXPECT_THROW(classify_regime(make(2, 0.5, {0.0, 0.0}), 1.5, kInfinity, 2.0), UnsupportedRegime);
}

TEST(Regime, RateExponents) {
  const auto omega = make(2, 1.5, {0.5, 0.25});
  const double sum_b = 0.75;
  // T31 with theta = 2: (1/2 - 1/2)_+ = 0.
  const auto t31 = classify_regime(omega, 2.0, 2.0, 2.0);
  EXPECT_DOUBLE_EQ(t31.rho, 1.5);
  EXPECT_DOUBLE_EQ(t31.lambda, -sum_b + 1.5);
  const auto t31b = classify_regime(omega, 3.0, 2.0, 4.0);
  EXPECT_DOUBLE_EQ(t31b.lambda, -sum_b + 1.5 + 0.25);

  // The T32 formula evaluated at p = 2 coincides with the T31 value.
  const double t32_at_two = -sum_b + (1.5 + std::max(1.0 / 2.0 - 1.0 / 2.0, 0.0));
  const auto p2q1 = classify_regime(omega, 2.0, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(p2q1.lambda, t32_at_two);
  EXPECT_DOUBLE_EQ(p2q1.rho, 1.5);

  const auto t32 = classify_regime(omega, 1.5, 1.0, 3.0);
  EXPECT_DOUBLE_EQ(t32.lambda, -sum_b + 1.5 + (1.0 / 1.5 - 1.0 / 3.0));
}

TEST(Regime, TheoreticalRateT33Example) {
  const auto omega = make(2, 1.5, {0.0, 0.0});
  const auto regime = classify_regime(omega, 2.0, kInfinity, 2.0);
  EXPECT_DOUBLE_EQ(regime.rho, 1.0);
  EXPECT_DOUBLE_EQ(regime.lambda, 1.5);
  const double expected = std::exp2(-10.0) * std::pow(10.0, 1.5);
  EXPECT_NEAR(theoretical_rate(regime, 1024.0), expected, 1e-15 * expected);
  EXPECT_THROW(theoretical_rate(regime, 2.0), DomainError);
}

TEST(FitRate, ExactPowerLaw) {
  const auto fit = fit_rate(synthetic(1.5, 0.0, 0.0, 1));
  EXPECT_NEAR(fit.rho, 1.5, 1e-9);
  EXPECT_NEAR(fit.lambda, 0.0, 1e-9);
  EXPECT_NEAR(fit.residual_rms, 0.0, 1e-9);
  EXPECT_NEAR(fit.two_point_slope, 1.5, 1e-12);
}

TEST(FitRate, ExactLogCorrection) {
  const auto fit = fit_rate(synthetic(1.0, 2.0, 0.0, 1));
  EXPECT_NEAR(fit.rho, 1.0, 1e-9);
  EXPECT_NEAR(fit.lambda, 2.0, 1e-9);
  EXPECT_GT(fit.condition, 1.0);
}

TEST(FitRate, NoisyPowerLaw) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const auto fit = fit_rate(synthetic(1.5, 0.0, 0.05, seed));
    EXPECT_NEAR(fit.rho, 1.5, 0.05) << "seed " << seed << " lambda " << fit.lambda;
  }
}

TEST(FitRate, RejectsDegenerateInput) {
  auto few = synthetic(1.0, 0.0, 0.0, 1);
  few.resize(4);
  EXPECT_THROW(fit_rate(few), DomainError);
  std::vector<ExperimentRecord> narrow;
  for (int i = 0; i < 6; ++i) narrow.push_back({0, 16.0 + i, 0, 0, 0});
  for (auto& r : narrow) r.error = 1.0 / r.M;
  EXPECT_THROW(fit_rate(narrow), DomainError);
}

TEST(Grids, GeometricAndOctave) {
  const auto g = geometric_grid(64.0, 1048576.0, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 64.0);
  EXPECT_NEAR(g.back(), 1048576.0, 1e-6);
  EXPECT_NEAR(g[1], std::pow(2.0, 9.5), 1e-9);
  EXPECT_EQ(octave_grid(64.0, 1048576.0).size(), 15u);
  EXPECT_THROW(geometric_grid(10.0, 5.0, 4), ConfigError);
}

TEST(Families, NamesRoundTrip) {
  for (auto f : {Family::random_ball, Family::shell, Family::g3, Family::g5, Family::g7}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_THROW(parse_family("bogus"), ConfigError);
}

TEST(Families, RegimeChecks) {
  RateExperiment exp = shell_experiment({0.0, 0.0}, 2.0);
  exp.family = Family::g3;
  EXPECT_NO_THROW(check_family_regime(exp));
  exp.bp.theta = 1.5;
  EXPECT_THROW(check_family_regime(exp), UnsupportedRegime);
  exp.family = Family::g7;
  exp.bp.theta = 2.0;
  EXPECT_THROW(check_family_regime(exp), UnsupportedRegime);
  exp.q = kInfinity;
  EXPECT_NO_THROW(check_family_regime(exp));
}

TEST(Families, RandomMembersAreNormalized) {
  for (auto family : {Family::shell, Family::random_ball}) {
    auto exp = shell_experiment({0.5, 0.25}, 2.0);
    exp.family = family;
    for (std::size_t i = 0; i < exp.N_grid.size(); ++i) {
      const auto f = family_member(exp, i, 0);
      EXPECT_NEAR(besov_norm(f, exp.omega, exp.bp), 1.0, 1e-9) << family_name(family) << " " << i;
      EXPECT_EQ(f, family_member(exp, i, 0));
      EXPECT_FALSE(f == family_member(exp, i, 1));
    }
  }
}

TEST(Families, UpperBoundChain) {
  // Unit-ball f at p = q = 2 and theta <= 2: ||f - P_N f||_2 <= N^{-1}.
  for (double theta : {1.0, 2.0}) {
    for (auto family : {Family::shell, Family::random_ball}) {
      auto exp = shell_experiment({0.5, 0.25}, theta);
      exp.family = family;
      for (std::size_t i = 0; i < exp.N_grid.size(); ++i) {
        const auto f = family_member(exp, i, 0);
        const double N = exp.N_grid[i];
        EXPECT_LE(approx_error(f, exp.omega, N, 2.0), besov_norm(f, exp.omega, exp.bp) / N * (1 + 1e-12))
            << family_name(family) << " theta=" << theta << " N=" << N;
      }
    }
  }
}

TEST(RateExperiment, RecordsAndDeterminism) {
  const auto exp = shell_experiment({0.0, 0.0}, 2.0);
  const auto a = rate_experiment(exp);
  const auto b = rate_experiment(exp);
  ASSERT_EQ(a.size(), exp.N_grid.size());
  const auto regime = check_family_regime(exp);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].N, exp.N_grid[i]);
    EXPECT_EQ(a[i].M, static_cast<double>(q_size(exp.omega, exp.N_grid[i])));
    EXPECT_EQ(a[i].error, b[i].error);
    EXPECT_DOUBLE_EQ(a[i].theory, theoretical_rate(regime, a[i].M));
    EXPECT_DOUBLE_EQ(a[i].ratio, a[i].error / a[i].theory);
    EXPECT_GT(a[i].error, 0.0);
  }
  auto short_grid = exp;
  short_grid.N_grid.resize(4);
  EXPECT_THROW(rate_experiment(short_grid), DomainError);
}

TEST(RateExperiment, WitnessRatiosPositive) {
  auto exp = shell_experiment({0.0, 0.0}, 4.0);
  exp.family = Family::g3;
  for (const auto& r : rate_experiment(exp)) EXPECT_GT(r.ratio, 0.0) << r.N;
}
