#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "permclt/clt_lab.hpp"
#include "permclt/error.hpp"
#include "permclt/normal.hpp"

namespace permclt {
namespace {

// Canonical rational a/b.
mpq_class Q(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

TEST(Statistics, NamedStatisticsEvaluate) {
  const Permutation p = Permutation::parse("2 4 1 3");
  const Permutation inv = p.inverse();
  EXPECT_EQ(descent_stat()(p, inv), 1.0);
  EXPECT_EQ(t_stat()(p, inv), 3.0);
  EXPECT_EQ(peaks_stat()(p, inv), 1.0);
  EXPECT_EQ(peaks_pair_stat()(p, inv), 1.0 + peaks(inv));
  EXPECT_EQ(statistic_by_name("T").name, "T");
  EXPECT_EQ(statistic_by_name("peaks_pair").degree, 3);
  EXPECT_THROW(statistic_by_name("nope"), InvalidArgument);
}

TEST(Statistics, LocalStatisticFromFile) {
  const std::string path = ::testing::TempDir() + "peaks.json";
  std::ofstream(path) << R"({"degree":3,"uniform_component":{"1 3 2":1,"2 3 1":1}})";
  const PairStatistic f = statistic_by_name("local:" + path);
  SeededRng rng(2);
  for (int i = 0; i < 50; ++i) {
    const Permutation p = sample_uniform(15, rng);
    EXPECT_EQ(f(p, p.inverse()), peaks(p));
  }
  EXPECT_THROW(statistic_by_name("local:/nonexistent/file.json"), InvalidArgument);
}

TEST(Statistics, ExactMomentsAvailableForDAndT) {
  const auto t = t_stat().exact_moments(9);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->mean, 8);
  EXPECT_EQ(t->variance, Q(23, 9));
  EXPECT_TRUE(descent_stat().exact_moments(5).has_value());
}

TEST(Graph, TwoPointsShareAnEdge) {
  SeededRng rng(1);
  const InteractionGraph g = build_graph(PointConfiguration::sample(2, rng), 1);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(degree_bound(build_graph(PointConfiguration({{0.5, 0.5}}), 1)), 0);
}

TEST(Graph, DegreeBounds) {
  SeededRng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const PointConfiguration cfg = PointConfiguration::sample(10 + trial % 40, rng);
    EXPECT_LE(degree_bound(build_graph(cfg, 1)), 4);
    EXPECT_LE(degree_bound(build_graph(cfg, 5)), 20);
  }
  EXPECT_THROW(build_graph(PointConfiguration::sample(5, rng), 0), InvalidArgument);
}

TEST(Graph, EdgesMatchRankDefinition) {
  SeededRng rng(23);
  const PointConfiguration cfg = PointConfiguration::sample(40, rng);
  const PointRanks r = rank_points(cfg.points());
  const InteractionGraph g = build_graph(cfg, 3);
  std::size_t edges = 0;
  for (int i = 0; i < 40; ++i) {
    for (int j = i + 1; j < 40; ++j) {
      const bool expected = std::abs(r.x_rank[i] - r.x_rank[j]) <= 3 ||
                            std::abs(r.y_rank[i] - r.y_rank[j]) <= 3;
      EXPECT_EQ(g.has_edge(i, j), expected);
      EXPECT_EQ(g.has_edge(j, i), expected);
      edges += expected ? 1 : 0;
    }
  }
  EXPECT_EQ(g.edge_count(), edges);
}

TEST(DeltaJ, ZeroForUnchangedPoint) {
  SeededRng rng(5);
  const PointConfiguration cfg = PointConfiguration::sample(20, rng);
  EXPECT_EQ(delta_j(t_stat(), cfg, cfg, 7), 0.0);
  const PointConfiguration other = PointConfiguration::sample(20, rng);
  EXPECT_LE(std::abs(delta_j(t_stat(), cfg, other, 7)), 4.0);
  EXPECT_THROW(delta_j(t_stat(), cfg, other, 20), InvalidArgument);
}

TEST(DeltaJ, NonInteractionIdentityWhenFarApart) {
  SeededRng rng(31);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const PointConfiguration x = PointConfiguration::sample(30, rng);
    const PointConfiguration xp = PointConfiguration::sample(30, rng);
    const std::size_t i = rng.below(30);
    const std::size_t j = rng.below(30);
    if (i == j) continue;
    const auto xi = x.with_replaced(i, xp[i]);
    const auto xj = x.with_replaced(j, xp[j]);
    const auto xij = xi.with_replaced(j, xp[j]);
    bool adjacent = false;
    for (const auto* c : {&x, &xi, &xj, &xij}) {
      adjacent = adjacent || build_graph(*c, 1).has_edge(static_cast<int>(i), static_cast<int>(j));
    }
    if (adjacent) continue;
    ++checked;
    const auto f = t_stat();
    EXPECT_EQ(evaluate_on_points(f, x) - evaluate_on_points(f, xj),
              evaluate_on_points(f, xi) - evaluate_on_points(f, xij));
  }
  EXPECT_GT(checked, 1000);
}

TEST(Interaction, TReportIsClean) {
  SeededRng rng(7);
  const auto report = check_interaction_rule(t_stat(), 50, 5000, rng, 1);
  EXPECT_EQ(report.violations, 0);
  EXPECT_GT(report.tested, 0);
  EXPECT_LE(report.max_abs_delta, 4.0);
  EXPECT_LE(report.delta, 21);
  EXPECT_LE(report.delta_single_axis, 11);
  EXPECT_EQ(report.extension_threshold, 5);
  EXPECT_EQ(report.abs_delta_third_moments.size(), 50u);
}

TEST(Interaction, IndependentOfThreadCount) {
  SeededRng a(9);
  SeededRng b(9);
  const auto r1 = check_interaction_rule(t_stat(), 20, 1000, a, 1, {1});
  const auto r2 = check_interaction_rule(t_stat(), 20, 1000, b, 1, {3});
  EXPECT_EQ(r1.tested, r2.tested);
  EXPECT_EQ(r1.delta, r2.delta);
  EXPECT_DOUBLE_EQ(r1.mean_abs_delta, r2.mean_abs_delta);
}

TEST(Interaction, RealValuedLocalPairStatistic) {
  const auto f = LocalStatistic::uniform(2, {0.25, -0.5});
  const auto g = LocalStatistic::uniform(2, {-1.0, 0.75});
  SeededRng rng(14);
  const auto report = check_interaction_rule(local_pair_stat(f, g), 30, 2000, rng, 1);
  EXPECT_EQ(report.violations, 0);
}

TEST(Interaction, WrongThresholdIsDetected) {
  // Peaks need threshold 2; threshold 1 misses interactions.
  SeededRng rng(15);
  const auto report = check_interaction_rule(peaks_pair_stat(), 30, 20000, rng, 1);
  EXPECT_GT(report.violations, 0);
}

TEST(Theorem4, Terms) {
  const std::vector<double> zeros(100, 0.0);
  const auto zero = theorem4_terms(0.0, 10.0, 1.0, 100, zeros);
  EXPECT_EQ(zero.term1, 0.0);
  EXPECT_EQ(zero.term2, 0.0);
  const double sigma = std::sqrt(t_variance_formula(100).get_d());
  const auto t = theorem4_terms(4.0, 10.0, sigma, 100, std::vector<double>(100, 1.0));
  EXPECT_NEAR(t.term1, 10.0 / (sigma * sigma) * 16.0 * 10.0, 1e-9);
  EXPECT_NEAR(t.term2, 100.0 / (2.0 * sigma * sigma * sigma), 1e-12);
  EXPECT_THROW(theorem4_terms(4.0, 10.0, 0.0, 100, zeros), InvalidArgument);
}

TEST(MonteCarlo, TwoPointLaw) {
  SeededRng rng(3);
  McOptions options;
  options.keep_samples = true;
  const auto result = mc_statistic(t_stat(), 2, 20000, rng, options);
  EXPECT_EQ(result.report.standardization, "exact");
  for (double v : result.raw) EXPECT_TRUE(v == 0.0 || v == 2.0);
  EXPECT_NEAR(result.report.ks, 0.5 - normal_cdf(-1.0), 0.02);
}

TEST(MonteCarlo, ReproducibleAndThreadIndependent) {
  SeededRng a(42);
  SeededRng b(42);
  McOptions one;
  one.threads = 1;
  McOptions four;
  four.threads = 4;
  const auto r1 = mc_statistic(t_stat(), 200, 5000, a, one).report;
  const auto r2 = mc_statistic(t_stat(), 200, 5000, b, four).report;
  EXPECT_DOUBLE_EQ(r1.ks, r2.ks);
  EXPECT_DOUBLE_EQ(r1.mean, r2.mean);
}

TEST(MonteCarlo, SamplersAgreeInLaw) {
  SeededRng rng(8);
  McOptions shuffle;
  shuffle.sampler = Sampler::shuffle;
  const auto a = mc_statistic(t_stat(), 100, 20000, rng, {}).report;
  const auto b = mc_statistic(t_stat(), 100, 20000, rng, shuffle).report;
  EXPECT_NEAR(a.mean, 99.0, 0.2);
  EXPECT_NEAR(b.mean, 99.0, 0.2);
  EXPECT_LT(a.ks, 0.08);
  EXPECT_LT(b.ks, 0.08);
}

TEST(MonteCarlo, SampleStandardizationWithoutExactMoments) {
  SeededRng rng(4);
  const auto r = mc_statistic(peaks_pair_stat(), 50, 2000, rng).report;
  EXPECT_EQ(r.standardization, "sample");
  EXPECT_DOUBLE_EQ(r.center, r.mean);
  EXPECT_THROW(mc_statistic(t_stat(), 1, 100, rng), InvalidArgument);
}

TEST(Bivariate, CorrelationAtSmallN) {
  SeededRng rng(10);
  const auto r3 = bivariate_experiment(3, 5000, rng);
  EXPECT_NEAR(r3.corr, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r3.exact_corr, 1.0);
  const auto r4 = bivariate_experiment(4, 50000, rng);
  EXPECT_DOUBLE_EQ(r4.exact_corr, 0.9);
  EXPECT_NEAR(r4.corr, 0.9, 0.01);
}

TEST(Coincidence, Rates) {
  SeededRng rng(13);
  EXPECT_DOUBLE_EQ(coincidence_rate(2, 1000, rng).rate, 1.0);
  EXPECT_DOUBLE_EQ(coincidence_rate(3, 1000, rng).rate, 1.0);
  const auto r = coincidence_rate(100, 20000, rng);
  EXPECT_GT(r.rate, 0.0);
  EXPECT_LT(r.rate, 1.0);
}

}  // namespace
}  // namespace permclt
