#include <cmath>
#include <cstdlib>
#include <vector>

#include <gtest/gtest.h>

#include "hcross/errors.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/kernels.hpp"
#include "hcross/lp_norm.hpp"
#include "test_support.hpp"

using namespace hcross;

namespace {

Complex at(const TrigPolynomial& f, std::vector<double> x) { return f(x); }

}  // namespace

TEST(ValleePoussin, Profile) {
  // V_n(0) = 3n, from the coefficient sum 2n - 1 + 2 * sum of the ramp.
  for (int n : {1, 2, 5, 16}) {
    const auto v = vallee_poussin(n);
    EXPECT_NEAR(at(v, {0.0}).real(), 3.0 * n, 1e-12) << n;
    for (int k = -3 * n; k <= 3 * n; ++k) {
      const double expected = std::abs(k) <= n ? 1.0 : (std::abs(k) < 2 * n ? (2.0 * n - std::abs(k)) / n : 0.0);
      EXPECT_EQ(vallee_poussin_coefficient(n, k), expected) << n << " " << k;
      EXPECT_EQ(v.coefficient_at(std::vector<int>{k}), Complex(expected)) << n << " " << k;
    }
  }
  EXPECT_EQ(vallee_poussin_coefficient(4, 6), 0.5);
  const auto v1 = vallee_poussin(1);
  EXPECT_EQ(v1.size(), 3u);
  const double x = 0.7;
  EXPECT_NEAR(at(v1, {x}).real(), 1.0 + 2.0 * std::cos(x), 1e-14);
}

TEST(Fejer, Profile) {
  const auto k2 = fejer(2);
  ASSERT_EQ(k2.size(), 5u);
  EXPECT_NEAR(k2.coefficient_at(std::vector<int>{0}).real(), 1.0, 1e-15);
  EXPECT_NEAR(k2.coefficient_at(std::vector<int>{1}).real(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(k2.coefficient_at(std::vector<int>{-2}).real(), 1.0 / 3.0, 1e-15);
  for (int n : {1, 3, 10, 33}) {
    EXPECT_NEAR(at(fejer(n), {0.0}).real(), n + 1.0, 1e-11) << n;
    EXPECT_EQ(fejer_coefficient(n, n + 1), 0.0);
  }
}

TEST(Fejer, NonnegativeWithUnitMean) {
  for (int n : {2, 7, 31}) {
    const auto k = fejer(n);
    double low = 0.0;
    for (int i = 0; i < 4096; ++i) low = std::min(low, at(k, {kTwoPi * i / 4096}).real());
    EXPECT_GE(low, -1e-12) << n;
    QuadratureSpec quad;
    quad.mode = QuadratureMode::adaptive_grid;
    EXPECT_NEAR(lp_norm(k, 1.0, quad), 1.0, 1e-6) << n;
  }
}

TEST(Fejer, NormGrowthBand) {
  // |K_n|^p has |x|^3-type kinks at the zeros of K_n, so the trapezoid rule
  // needs about 32 n points per axis at n = 2^10.
  QuadratureSpec quad;
  quad.rel_tol = 1e-6;
  quad.max_grid = std::size_t{1} << 18;
  for (double p : {1.5, 2.0, 4.0}) {
    double lo = 1e300;
    double hi = 0.0;
    for (int e = 3; e <= 10; ++e) {
      const int n = 1 << e;
      const double ratio = lp_norm(fejer(n), p, quad) / std::pow(n, 1.0 - 1.0 / p);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    EXPECT_LE(hi / lo, 1.5) << "p=" << p << " band [" << lo << ", " << hi << "]";
  }
}

TEST(ABand, FactorExamples) {
  EXPECT_EQ(a_band_factor(2, 3), 0.5);
  EXPECT_EQ(a_band_factor(2, 4), 1.0);
  EXPECT_EQ(a_band_factor(2, -6), 0.5);
  for (int k : {0, 1, 2, -2, 8, 9, -8}) EXPECT_EQ(a_band_factor(2, k), 0.0) << k;
  for (int k : {0, 1, 2, -1}) EXPECT_EQ(a_band_factor(1, k), 1.0) << k;
  EXPECT_EQ(a_band_factor(1, 3), 0.5);
  EXPECT_EQ(a_band_factor(1, 4), 0.0);
}

TEST(ABand, TelescopesToValleePoussin) {
  for (int S = 1; S <= 8; ++S) {
    for (int k = -(1 << (S + 1)); k <= (1 << (S + 1)); ++k) {
      double sum = 0.0;
      for (int s = 1; s <= S; ++s) sum += a_band_factor(s, k);
      EXPECT_NEAR(sum, vallee_poussin_coefficient(1 << S, k), 1e-15) << S << " " << k;
      if (k != 0 && std::abs(k) <= (1 << (S - 1))) EXPECT_EQ(sum, 1.0) << S << " " << k;
    }
  }
}

TEST(ABand, PartitionOfUnityInTwoDimensions) {
  const int S = 6;
  for (int k1 = 1; k1 <= 32; k1 += 3) {
    for (int k2 = -32; k2 <= -1; k2 += 5) {
      double sum = 0.0;
      for (int s1 = 1; s1 <= S; ++s1) {
        for (int s2 = 1; s2 <= S; ++s2) {
          const double m = a_band_multiplier({s1, s2}, std::vector<int>{k1, k2});
          EXPECT_GE(m, 0.0);
          EXPECT_LE(m, 1.0);
          sum += m;
        }
      }
      EXPECT_EQ(sum, 1.0) << k1 << "," << k2;
    }
  }
}

TEST(ABand, DistantBandsAreDisjoint) {
  for (int s = 1; s <= 6; ++s) {
    for (int t = s + 2; t <= 8; ++t) {
      for (int k = -600; k <= 600; ++k) {
        EXPECT_FALSE(a_band_factor(s, k) > 0.0 && a_band_factor(t, k) > 0.0) << s << " " << t << " " << k;
      }
    }
  }
}

TEST(ABand, KernelMatchesMultiplier) {
  const DyadicIndex s{2, 3};
  const auto kernel = a_band_kernel(s);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    EXPECT_EQ(kernel.coefficient(i).real(), a_band_multiplier(s, kernel.frequency(i)));
  }
  EXPECT_EQ(kernel.max_degree(), (std::vector<int>{7, 15}));
}

TEST(AApply, Examples) {
  for (int s = 2; s <= 8; ++s) {
    const auto peak = TrigPolynomial::monomial({1 << s});
    EXPECT_EQ(a_apply(peak, {s}), peak) << s;
  }
  const auto far = TrigPolynomial::monomial({40, 3});
  EXPECT_TRUE(a_apply(far, {2, 2}).empty());
}

TEST(AApply, SumOverBandsRecoversF) {
  const auto f = hcross::testing::random_poly(2, 60, 50, 31);
  TrigPolynomial sum(2);
  for (int s1 = 1; s1 <= 8; ++s1) {
    for (int s2 = 1; s2 <= 8; ++s2) sum += a_apply(f, {s1, s2});
  }
  ASSERT_EQ(sum.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_NEAR(std::abs(sum.coefficient(i) - f.coefficient(i)), 0.0, 1e-14);
  }
}

TEST(KPacket, OneDimensionalProfile) {
  const auto packet = k_packet({3});
  ASSERT_EQ(packet.size(), 5u);
  const double weights[] = {1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0 / 3.0, 1.0 / 3.0};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(packet.frequency(static_cast<std::size_t>(i))[0], 4 + i);
    EXPECT_NEAR(packet.coefficient(static_cast<std::size_t>(i)).real(), weights[i], 1e-15);
  }
}

TEST(KPacket, PeakAtCenter) {
  const DyadicIndex s{3, 5};
  const std::vector<double> center{1.1, 4.0};
  const auto packet = k_packet(s, center);
  EXPECT_NEAR(std::abs(packet(center)), (2.0 + 1.0) * (8.0 + 1.0), 1e-11);
  const double l2 = std::sqrt(packet.l2_norm_squared());
  const double ref = std::sqrt(fejer(2).l2_norm_squared() * fejer(8).l2_norm_squared());
  EXPECT_NEAR(l2, ref, 1e-13);
}

TEST(KPacket, OverrideAndErrors) {
  const auto packet = k_packet({2, 4}, {}, 1);
  EXPECT_EQ(packet.size(), 9u);
  EXPECT_THROW(k_packet({1, 3}), DomainError);
  EXPECT_THROW(k_packet({2}, {}, 3), DomainError);
}
