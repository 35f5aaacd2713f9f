#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "lexigauge/stats.hpp"
#include "support.hpp"

namespace st = lexigauge::stats;
using testsupport::fixture;
using testsupport::read_file;
using V = std::vector<double>;

TEST(Descriptives, Examples) {
  auto d = st::descriptives(V{1, 2, 3, 4, 5});
  EXPECT_EQ(d.min, 1);
  EXPECT_EQ(d.q1, 2);
  EXPECT_EQ(d.median, 3);
  EXPECT_EQ(d.mean, 3);
  EXPECT_EQ(d.q3, 4);
  EXPECT_EQ(d.max, 5);
  d = st::descriptives(V{1, 1, 1, 1});
  for (double v : {d.min, d.q1, d.median, d.mean, d.q3, d.max}) EXPECT_EQ(v, 1);
  d = st::descriptives(V{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(d.q1, 1.75);
  EXPECT_DOUBLE_EQ(d.median, 2.5);
  EXPECT_DOUBLE_EQ(d.q3, 3.25);
  EXPECT_THROW(st::descriptives(V{}), lexigauge::DomainError);
}

TEST(Descriptives, OrderedAndPermutationInvariant) {
  std::mt19937_64 rng(3);
  std::lognormal_distribution<double> dist(0.0, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    V v(1 + rng() % 80);
    for (auto& x : v) x = dist(rng);
    const auto d = st::descriptives(v);
    EXPECT_LE(d.min, d.q1);
    EXPECT_LE(d.q1, d.median);
    EXPECT_LE(d.median, d.q3);
    EXPECT_LE(d.q3, d.max);
    EXPECT_LE(d.min, d.mean);
    EXPECT_LE(d.mean, d.max);
    std::shuffle(v.begin(), v.end(), rng);
    const auto e = st::descriptives(v);
    EXPECT_EQ(d.mean, e.mean);
    EXPECT_EQ(d.median, e.median);
  }
}

TEST(ShapiroWilk, MatchesReferenceFixtures) {
  const auto ref = nlohmann::json::parse(read_file(fixture("shapiro/shapiro_reference.json")));
  ASSERT_EQ(ref["vectors"].size(), 20u);
  for (const auto& v : ref["vectors"]) {
    const auto values = v["values"].get<V>();
    const auto r = st::shapiro_wilk(values);
    EXPECT_NEAR(r.w_statistic, v["w"].get<double>(), 1e-3) << "n=" << values.size();
    EXPECT_NEAR(r.p_value, v["p"].get<double>(), 1e-2) << "n=" << values.size();
    EXPECT_EQ(r.n, values.size());
  }
  const auto& nd = ref["near_degenerate"];
  const auto r = st::shapiro_wilk(nd["values"].get<V>());
  EXPECT_LT(r.w_statistic, 1.0);
  EXPECT_NEAR(r.w_statistic, nd["w"].get<double>(), 1e-3);
  EXPECT_NEAR(r.p_value, nd["p"].get<double>(), 1e-2);
}

TEST(ShapiroWilk, Errors) {
  EXPECT_THROW(st::shapiro_wilk(V{1, 2}), lexigauge::SizeError);
  EXPECT_THROW(st::shapiro_wilk(V(5001, 1.0)), lexigauge::DomainError);
  EXPECT_THROW(st::shapiro_wilk(V{4, 4, 4, 4}), lexigauge::DegenerateInputError);
}

TEST(ShapiroWilk, ResultRanges) {
  std::mt19937_64 rng(8);
  std::exponential_distribution<double> e(1.0);
  for (std::size_t n : {3u, 4u, 5u, 7u, 11u, 12u, 50u, 651u, 5000u}) {
    V v(n);
    for (auto& x : v) x = e(rng);
    const auto r = st::shapiro_wilk(v);
    EXPECT_GT(r.w_statistic, 0.0);
    EXPECT_LE(r.w_statistic, 1.0);
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
  }
}

TEST(RankSum, IdenticalSamples) {
  const auto r = st::wilcoxon_rank_sum(V{1, 2, 3}, V{1, 2, 3});
  EXPECT_DOUBLE_EQ(r.u_statistic, 4.5);
  EXPECT_NEAR(r.p_value, 1.0, 1e-12);
  EXPECT_NEAR(r.effect_size_r, 0.0, 1e-12);
}

TEST(RankSum, ExactExamples) {
  EXPECT_NEAR(st::exact_rank_sum_p(V{1, 2}, V{3, 4}), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(st::exact_rank_sum_p(V{1}, V{2}), 1.0);
  EXPECT_NEAR(st::exact_rank_sum_p(V{1, 2, 3}, V{4, 5, 6}), 0.1, 1e-12);
  EXPECT_EQ(st::wilcoxon_rank_sum(V{1, 2}, V{3, 4}).u_statistic, 0.0);
  EXPECT_THROW(st::exact_rank_sum_p(V{1, 2}, V{2, 3}), lexigauge::UnsupportedInputError);
  EXPECT_THROW(st::exact_rank_sum_p(V(11, 0.0), V(10, 1.0)), lexigauge::SizeError);
  EXPECT_THROW(st::exact_rank_sum_p(V{}, V{1}), lexigauge::DomainError);
}

TEST(RankSum, ExactAgreesWithRecurrence) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nx = 1 + rng() % 9, ny = 1 + rng() % 9;
    V pool(nx + ny);
    std::iota(pool.begin(), pool.end(), 1.0);
    std::shuffle(pool.begin(), pool.end(), rng);
    const V x(pool.begin(), pool.begin() + static_cast<long>(nx));
    const V y(pool.begin() + static_cast<long>(nx), pool.end());
    const double u = st::wilcoxon_rank_sum(x, y).u_statistic;
    EXPECT_NEAR(st::exact_rank_sum_p(x, y), testsupport::recurrence_exact_p(nx, ny, u), 1e-12);
  }
}

TEST(RankSum, HandComputedTieCorrection) {
  // Pooled [1,2,2,3 | 2,3,4,5]: midranks x = 1, 3, 3, 5.5 -> R = 12.5, U = 2.5.
  // Ties: {2,2,2} and {3,3} -> sum(t^3 - t) = 24 + 6 = 30.
  const auto r = st::wilcoxon_rank_sum(V{1, 2, 2, 3}, V{2, 3, 4, 5});
  EXPECT_DOUBLE_EQ(r.u_statistic, 2.5);
  const double var = 16.0 / 12.0 * (9.0 - 30.0 / 56.0);
  const double z = (2.5 - 8.0 + 0.5) / std::sqrt(var);
  EXPECT_NEAR(r.z_score, z, 1e-12);
  EXPECT_NEAR(r.p_value, std::erfc(std::fabs(z) / std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(r.effect_size_r, std::fabs(z) / std::sqrt(8.0), 1e-12);
}

TEST(RankSum, RankInvarianceAndExchangeability) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd(0.0, 1.0);
  V x(15), y(12);
  for (auto& v : x) v = nd(rng);
  for (auto& v : y) v = nd(rng) + 0.5;
  y[3] = x[2];  // a tie across samples
  const auto base = st::wilcoxon_rank_sum(x, y);
  for (int k = 0; k < 50; ++k) {
    const double a = 0.1 + (rng() % 1000) / 100.0;
    const double b = static_cast<double>(rng() % 200) - 100.0;
    auto f = [&](double v) { return k % 2 ? a * v + b : std::exp(v / 3.0) + b; };
    V tx, ty;
    for (double v : x) tx.push_back(f(v));
    for (double v : y) ty.push_back(f(v));
    const auto r = st::wilcoxon_rank_sum(tx, ty);
    EXPECT_EQ(r.u_statistic, base.u_statistic);
    EXPECT_EQ(r.z_score, base.z_score);
    EXPECT_EQ(r.p_value, base.p_value);
    EXPECT_EQ(r.effect_size_r, base.effect_size_r);
  }
  const auto swapped = st::wilcoxon_rank_sum(y, x);
  EXPECT_NEAR(swapped.p_value, base.p_value, 1e-15);
  EXPECT_NEAR(swapped.effect_size_r, base.effect_size_r, 1e-15);
  EXPECT_NEAR(swapped.u_statistic, 15.0 * 12.0 - base.u_statistic, 1e-12);
}

TEST(RankSum, ResultRanges) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    V x(1 + rng() % 30), y(1 + rng() % 30);
    for (auto& v : x) v = static_cast<double>(rng() % 10);
    for (auto& v : y) v = static_cast<double>(rng() % 12);
    const auto r = st::wilcoxon_rank_sum(x, y);
    EXPECT_GE(r.u_statistic, 0.0);
    EXPECT_LE(r.u_statistic, static_cast<double>(x.size() * y.size()));
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
    EXPECT_GE(r.effect_size_r, 0.0);
    EXPECT_LE(r.effect_size_r, 1.0);
    EXPECT_NEAR(r.effect_size_r, std::fabs(r.z_score) / std::sqrt(static_cast<double>(x.size() + y.size())), 1e-15);
    EXPECT_EQ(r.effect_size_r == 0.0, r.z_score == 0.0);
  }
  EXPECT_THROW(st::wilcoxon_rank_sum(V{}, V{1}), lexigauge::DomainError);
}

TEST(Conversions, EffectSizeRoundTrip) {
  for (double r : {0.05, 0.163, 0.216, 0.621}) {
    const double z = st::z_from_effect_size(r, 1302);
    const double p = st::two_sided_p_from_z(z);
    EXPECT_NEAR(st::z_from_two_sided_p(p), z, 1e-6 * z);
    EXPECT_NEAR(st::effect_size_from_z(z, 1302), r, 1e-12);
  }
  EXPECT_NEAR(st::two_sided_p_from_z(1.959963984540054), 0.05, 1e-12);
  EXPECT_THROW(st::z_from_two_sided_p(0.0), lexigauge::DomainError);
}

TEST(Kde, NormalSampleIntegratesToOne) {
  std::mt19937_64 rng(1000);
  std::normal_distribution<double> nd(0.0, 1.0);
  V v(1000);
  for (auto& x : v) x = nd(rng);
  const auto s = st::kde(v, 512);
  ASSERT_EQ(s.grid.size(), 512u);
  EXPECT_NEAR(st::trapezoid_integral(s), 1.0, 0.01);
  for (double d : s.density) EXPECT_GE(d, 0.0);
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  EXPECT_DOUBLE_EQ(s.grid.front(), *mn - 3 * s.bandwidth);
  EXPECT_DOUBLE_EQ(s.grid.back(), *mx + 3 * s.bandwidth);
}

TEST(Kde, SilvermanBandwidthByHand) {
  const V v{1, 2, 3, 4, 10};
  // sd = sqrt(50 / 4) = 3.5355; IQR = 4 - 2 = 2 -> 2 / 1.34 = 1.4925
  EXPECT_NEAR(st::silverman_bandwidth(v), 0.9 * (2.0 / 1.34) * std::pow(5.0, -0.2), 1e-12);
  // Zero IQR falls back to sd.
  const V w{5, 5, 5, 5, 5, 5, 9};
  EXPECT_NEAR(st::silverman_bandwidth(w), 0.9 * st::sample_sd(w) * std::pow(7.0, -0.2), 1e-12);
}

TEST(Kde, SymmetricInputGivesSymmetricDensity) {
  const V v{-3, -1.5, -0.2, 0.2, 1.5, 3};
  const auto s = st::kde(v, 101);
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    EXPECT_NEAR(s.grid[i], -s.grid[s.grid.size() - 1 - i], 1e-9);
    EXPECT_NEAR(s.density[i], s.density[s.grid.size() - 1 - i], 1e-9);
  }
}

TEST(Kde, Errors) {
  EXPECT_THROW(st::kde(V{2, 2, 2}), lexigauge::DegenerateInputError);
  EXPECT_THROW(st::kde(V{}), lexigauge::DomainError);
  EXPECT_THROW(st::kde(V{1, 2}, 8), lexigauge::DomainError);
}
