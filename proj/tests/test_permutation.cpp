#include <gtest/gtest.h>

#include <map>
#include <set>

#include "permclt/error.hpp"
#include "permclt/permutation.hpp"
#include "permclt/rng.hpp"

namespace permclt {
namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

TEST(Permutation, IdentityHasExpectedOneLine) {
  EXPECT_EQ(Permutation::identity(3), P("1 2 3"));
  EXPECT_EQ(Permutation::identity(1), P("1"));
  EXPECT_EQ(Permutation::identity(5).to_string(), "1 2 3 4 5");
  EXPECT_TRUE(Permutation::identity(5).is_identity());
}

TEST(Permutation, ParseAcceptsSeparatorsAndRejectsInvalid) {
  EXPECT_EQ(P("3,1,2"), P("3 1 2"));
  EXPECT_EQ(P("  3\t1 2 "), P("3 1 2"));
  EXPECT_THROW(P("1 1 2"), InvalidArgument);
  EXPECT_THROW(P("0 1 2"), InvalidArgument);
  EXPECT_THROW(P("1 2 4"), InvalidArgument);
  EXPECT_THROW(P("1 x 2"), InvalidArgument);
  EXPECT_THROW(P(""), InvalidArgument);
}

TEST(Permutation, InverseExamples) {
  EXPECT_EQ(P("2 4 1 3").inverse(), P("3 1 4 2"));
  EXPECT_EQ(P("1 2 3").inverse(), P("1 2 3"));
  EXPECT_EQ(P("3 1 2").inverse(), P("2 3 1"));
}

TEST(Permutation, ComposeExamples) {
  EXPECT_EQ(compose(P("2 1 3"), P("3 1 2")), P("3 2 1"));
  const Permutation p = P("4 2 5 1 3");
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(compose(Permutation::identity(5), p), p);
  EXPECT_THROW(compose(P("1 2"), P("1 2 3")), InvalidArgument);
}

TEST(Permutation, ComposePointwiseProperty) {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Permutation p = sample_uniform(n, rng);
    const Permutation q = sample_uniform(n, rng);
    const Permutation r = compose(p, q);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(r(i), p(q(i)));
    EXPECT_EQ(r.inverse(), compose(q.inverse(), p.inverse()));
    EXPECT_EQ(p.inverse().inverse(), p);
  }
}

TEST(Permutation, ReversalReversesOneLine) {
  EXPECT_EQ(reversal(P("2 4 1 3")), P("3 1 4 2"));
}

TEST(Sampling, SizeOneIsIdentity) {
  SeededRng rng(1);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(sample_uniform(1, rng).is_identity());
}

TEST(Sampling, UniformOnS3) {
  SeededRng rng(2024);
  std::map<std::string, int> counts;
  for (int i = 0; i < 60000; ++i) ++counts[sample_uniform(3, rng).to_string()];
  ASSERT_EQ(counts.size(), 6u);
  double chi2 = 0.0;
  for (const auto& [key, c] : counts) {
    EXPECT_NEAR(c, 10000, 400) << key;
    chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  }
  EXPECT_LT(chi2, 20.5);  // 0.999 quantile of chi-square with 5 d.o.f.
}

TEST(Sampling, FixedSeedIsReproducible) {
  SeededRng a(99);
  SeededRng b(99);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sample_uniform(20, a), sample_uniform(20, b));
  SeededRng c(100);
  EXPECT_NE(sample_uniform(20, a), sample_uniform(20, c));
}

TEST(Rng, ChildStreamsAreDeterministicAndDistinct) {
  SeededRng rng(5);
  EXPECT_EQ(rng.child(3).next(), SeededRng(5).child(3).next());
  EXPECT_NE(rng.child(3).next(), rng.child(4).next());
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

TEST(Rng, BelowStaysInRange) {
  SeededRng rng(8);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Enumerate, CountsAndOrder) {
  std::vector<Permutation> s2;
  for (const auto& p : enumerate(2)) s2.push_back(p);
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2[0], P("1 2"));
  EXPECT_EQ(s2[1], P("2 1"));
  std::set<std::string> s3;
  for (const auto& p : enumerate(3)) s3.insert(p.to_string());
  EXPECT_EQ(s3.size(), 6u);
  std::size_t count = 0;
  for (const auto& p : enumerate(8)) {
    (void)p;
    ++count;
  }
  EXPECT_EQ(count, 40320u);
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate(11), CapExceeded);
  EXPECT_NO_THROW(enumerate(11, 11));
  try {
    enumerate(12);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.n(), 12);
    EXPECT_EQ(e.cap(), 10);
  }
}

TEST(Points, HandRankedExample) {
  const PointConfiguration cfg({{0.1, 0.9}, {0.5, 0.2}, {0.8, 0.6}});
  const auto [pi, sigma] = from_points(cfg);
  EXPECT_EQ(pi, P("3 1 2"));
  EXPECT_EQ(sigma, P("2 3 1"));
}

TEST(Points, DiagonalGivesIdentity) {
  const auto [pi, sigma] = from_points(PointConfiguration({{0.1, 0.1}, {0.2, 0.2}}));
  EXPECT_TRUE(pi.is_identity());
  EXPECT_TRUE(sigma.is_identity());
}

TEST(Points, SigmaIsInverseOfPi) {
  SeededRng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(150));
    const auto [pi, sigma] = from_points(PointConfiguration::sample(n, rng));
    EXPECT_EQ(sigma, pi.inverse());
  }
}

TEST(Points, RejectsInvalidAndDuplicatePoints) {
  EXPECT_THROW(PointConfiguration({{1.5, 0.2}}), InvalidArgument);
  EXPECT_THROW(PointConfiguration({}), InvalidArgument);
  EXPECT_THROW(from_points(PointConfiguration({{0.3, 0.3}, {0.3, 0.3}})), InvalidArgument);
}

TEST(Points, BucketRankingMatchesSorting) {
  SeededRng rng(3);
  const PointConfiguration cfg = PointConfiguration::sample(500, rng);
  const PointRanks ranks = rank_points(cfg.points());
  for (int a = 0; a < cfg.size(); ++a) {
    for (int b = a + 1; b < cfg.size(); ++b) {
      EXPECT_EQ(cfg[a].u < cfg[b].u, ranks.x_rank[a] < ranks.x_rank[b]);
      EXPECT_EQ(cfg[a].v < cfg[b].v, ranks.y_rank[a] < ranks.y_rank[b]);
    }
  }
  for (int r = 0; r < cfg.size(); ++r) EXPECT_EQ(ranks.x_rank[ranks.x_order[r]], r);
}

TEST(Points, WithReplacedChangesOnePoint) {
  const PointConfiguration cfg({{0.1, 0.9}, {0.5, 0.2}});
  const PointConfiguration out = cfg.with_replaced(1, {0.7, 0.7});
  EXPECT_EQ(out[0], cfg[0]);
  EXPECT_EQ(out[1], (Point{0.7, 0.7}));
  EXPECT_THROW(cfg.with_replaced(2, {0.1, 0.1}), InvalidArgument);
}

}  // namespace
}  // namespace permclt
