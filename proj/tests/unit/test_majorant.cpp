#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hcross/errors.hpp"
#include "hcross/majorant.hpp"

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

}  // namespace

TEST(OmegaEval, BoundaryIsZero) {
  const auto p = make(1, 1.0, {0.0});
  const std::vector<double> t{0.0};
  EXPECT_EQ(omega_eval(p, t), 0.0);
}

TEST(OmegaEval, PowerOnlyWhenLogFactorIsInert) {
  const auto p = make(1, 1.0, {0.0});
  const std::vector<double> t{0.125};
  EXPECT_DOUBLE_EQ(omega_eval(p, t), 0.125);
}

TEST(OmegaEval, TwoDimensionalWithLogs) {
  const auto p = make(2, 1.0, {0.5, 0.5});
  const std::vector<double> t{0.25, 1.0 / 16.0};
  // 2^-2 * 2^-0.5 * 2^-4 * 4^-0.5
  EXPECT_NEAR(omega_eval(p, t), std::exp2(-7.5), 1e-15);
}

TEST(OmegaEval, RejectsNegativeArgument) {
  const auto p = make(1, 1.0, {0.0});
  const std::vector<double> t{-0.1};
  EXPECT_THROW(omega_eval(p, t), DomainError);
}

TEST(OmegaDyadic, Examples) {
  EXPECT_DOUBLE_EQ(omega_dyadic(make(1, 1.0, {0.0}), std::vector<int>{3}), 0.125);
  EXPECT_NEAR(omega_dyadic(make(2, 1.0, {0.5, 0.5}), std::vector<int>{2, 4}), std::exp2(-7.5), 1e-15);
  EXPECT_DOUBLE_EQ(omega_dyadic(make(2, 2.0, {0.0, 0.0}, 3), std::vector<int>{1, 1}), 1.0 / 16.0);
}

TEST(OmegaDyadic, AgreesWithEval) {
  const auto p = make(3, 1.3, {0.4, -0.7, 1.1});
  for (int a = 1; a <= 12; a += 3) {
    for (int b = 1; b <= 12; b += 2) {
      for (int c = 1; c <= 12; c += 5) {
        const std::vector<int> s{a, b, c};
        const std::vector<double> t{std::exp2(-a), std::exp2(-b), std::exp2(-c)};
        const double dy = omega_dyadic(p, s);
        EXPECT_NEAR(dy, omega_eval(p, t), 1e-12 * dy) << a << "," << b << "," << c;
      }
    }
  }
}

TEST(OmegaDyadic, RejectsZeroIndex) {
  EXPECT_THROW(omega_dyadic(make(1, 1.0, {0.0}), std::vector<int>{0}), DomainError);
}

TEST(OmegaEval, ZeroLogExponentIsPurePower) {
  const auto p = make(2, 1.7, {0.0, 0.0});
  for (double x : {0.9, 0.3, 0.01, 1e-5}) {
    const std::vector<double> t{x, 0.5 * x};
    EXPECT_DOUBLE_EQ(omega_eval(p, t), std::pow(x, 1.7) * std::pow(0.5 * x, 1.7)) << x;
  }
}

TEST(OmegaEval, NondecreasingAndScaling) {
  const auto p = make(2, 1.5, {0.5, -0.5}, 2);
  for (int m = 0; m < 30; ++m) {
    const std::vector<double> lo{std::exp2(-m - 1), 0.01};
    const std::vector<double> hi{std::exp2(-m), 0.01};
    EXPECT_LE(omega_eval(p, lo), omega_eval(p, hi) * (1 + 1e-12)) << m;
    for (int mu : {2, 3, 7}) {
      const std::vector<double> t{std::exp2(-m - 3), std::exp2(-m - 4)};
      const std::vector<double> st{mu * t[0], mu * t[1]};
      EXPECT_LE(omega_eval(p, st), std::pow(mu * mu, p.l) * omega_eval(p, t) * (1 + 1e-12)) << m << " " << mu;
    }
  }
}

TEST(MajorantParams, Validation) {
  EXPECT_THROW(make(0, 1.0, {}).validate(), ConfigError);
  EXPECT_THROW(make(2, 1.0, {0.0}).validate(), ConfigError);
  EXPECT_THROW(make(1, 2.0, {0.0}, 2).validate(), ConfigError);
  EXPECT_THROW(make(1, 1.0, {1.0}).validate(), ConfigError);
  EXPECT_THROW(make(1, -1.0, {-2.0}).validate(), ConfigError);
  EXPECT_NO_THROW(make(1, 1.0, {-5.0}).validate());
}

TEST(MajorantAxioms, PurePowerHasUnitConstants) {
  const auto audit = verify_majorant_axioms(make(1, 1.0, {0.0}), 0.5, 1.5, 10);
  EXPECT_TRUE(audit.all_pass());
  EXPECT_DOUBLE_EQ(audit.c1, 1.0);
  EXPECT_DOUBLE_EQ(audit.c2, 1.0);
  EXPECT_TRUE(audit.violations.empty());
}

TEST(MajorantAxioms, LogFactorHasFiniteConstants) {
  const auto audit = verify_majorant_axioms(make(1, 1.0, {0.5}), 0.5, 1.5, 10);
  EXPECT_TRUE(audit.all_pass());
  EXPECT_TRUE(std::isfinite(audit.c1));
  EXPECT_GT(audit.c2, 0.0);
}

TEST(MajorantAxioms, AlphaAtOrderWithNegativeLogFails) {
  // Omega(t)/t = log(1/t)^{1/2} grows without bound as t -> 0, so no C1 works.
  const auto audit = verify_majorant_axioms(make(1, 1.0, {-0.5}), 1.0, 1.5, 20);
  EXPECT_FALSE(audit.s_condition);
  bool flagged = false;
  for (const auto& v : audit.violations) flagged = flagged || v.condition == "S";
  EXPECT_TRUE(flagged);
}

TEST(MajorantAxioms, PositiveLogSatisfiesSAtOrder) {
  const auto audit = verify_majorant_axioms(make(1, 1.0, {0.5}), 1.0, 1.5, 20);
  EXPECT_TRUE(audit.s_condition);
  EXPECT_DOUBLE_EQ(audit.c1, 1.0);
}

TEST(MajorantAxioms, GammaAtOrderWithPositiveLogFails) {
  // Omega(t)/t = log(1/t)^{-1/2} tends to 0, so no C2 > 0 works.
  const auto audit = verify_majorant_axioms(make(1, 1.0, {0.5}), 0.5, 1.0, 20);
  EXPECT_FALSE(audit.sl_condition);
}

TEST(MajorantAxioms, RejectsBadExponents) {
  const auto p = make(1, 1.0, {0.0});
  EXPECT_THROW(verify_majorant_axioms(p, 0.0, 1.0, 10), DomainError);
  EXPECT_THROW(verify_majorant_axioms(p, 0.5, 2.0, 10), DomainError);
  EXPECT_THROW(verify_majorant_axioms(p, 0.5, 1.0, 1), DomainError);
}
