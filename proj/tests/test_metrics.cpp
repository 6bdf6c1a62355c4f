#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "permclt/error.hpp"
#include "permclt/metrics.hpp"
#include "permclt/stats.hpp"

namespace permclt {
namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

Permutation swap_values(const Permutation& p, int a, int b) {
  std::vector<int> v(p.values().begin(), p.values().end());
  for (int& x : v) {
    if (x == a) {
      x = b;
    } else if (x == b) {
      x = a;
    }
  }
  return Permutation(std::move(v));
}

// BFS from p where each move swaps two values (adjacent values only when
// `adjacent`); returns the distance to every reachable permutation.
std::map<std::string, int> bfs(const Permutation& p, bool adjacent) {
  std::map<std::string, int> dist{{p.to_string(), 0}};
  std::queue<Permutation> queue;
  queue.push(p);
  const int n = p.size();
  while (!queue.empty()) {
    const Permutation cur = queue.front();
    queue.pop();
    const int d = dist[cur.to_string()];
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (adjacent && b != a + 1) continue;
        const Permutation next = swap_values(cur, a, b);
        if (dist.emplace(next.to_string(), d + 1).second) queue.push(next);
      }
    }
  }
  return dist;
}

TEST(Metrics, ZeroOnDiagonal) {
  SeededRng rng(1);
  const Permutation p = sample_uniform(7, rng);
  for (MetricKind k : kClassicalMetrics) EXPECT_EQ(distance(k, p, p), 0.0);
  EXPECT_EQ(distance(MetricKind::descent_edge, p, p), 0.0);
  EXPECT_EQ(descent_graph_distance(p, p), 0);
}

TEST(Metrics, Examples) {
  const Permutation id = Permutation::identity(4);
  EXPECT_EQ(distance(MetricKind::kendall, id, P("2 1 3 4")), 1.0);
  EXPECT_EQ(distance(MetricKind::cayley, id, P("2 1 4 3")), 2.0);
  EXPECT_EQ(distance(MetricKind::hamming, id, P("2 1 4 3")), 4.0);
  EXPECT_EQ(distance(MetricKind::footrule, id, P("4 3 2 1")), 8.0);
  EXPECT_EQ(distance(MetricKind::rho_squared, id, P("4 3 2 1")), 20.0);
  EXPECT_EQ(distance(MetricKind::ulam, id, P("2 3 4 1")), 1.0);
  EXPECT_THROW(distance(MetricKind::kendall, id, Permutation::identity(3)), InvalidArgument);
  EXPECT_THROW(distance(MetricKind::descent_graph, id, id), InvalidArgument);
}

TEST(Metrics, GrahamPair) {
  const Permutation pi = P("3 4 1 2 5");
  const Permutation sigma = P("1 4 5 2 3");
  const Permutation id = Permutation::identity(5);
  EXPECT_EQ(distance(MetricKind::descent_edge, pi, sigma), 6.0);
  EXPECT_EQ(distance(MetricKind::descent_edge, pi, id), 2.0);
  EXPECT_EQ(distance(MetricKind::descent_edge, id, sigma), 2.0);
  EXPECT_EQ(descent_graph_distance(pi, sigma), 4);
}

TEST(Metrics, KendallAndCayleyMatchBfs) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate(n)) {
      const auto kendall = bfs(p, true);
      const auto cayley = bfs(p, false);
      for (const auto& q : enumerate(n)) {
        EXPECT_EQ(distance(MetricKind::kendall, p, q), kendall.at(q.to_string()));
        EXPECT_EQ(distance(MetricKind::cayley, p, q), cayley.at(q.to_string()));
      }
    }
  }
}

TEST(Metrics, UlamMatchesLisOracle) {
  SeededRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation p = sample_uniform(9, rng);
    const Permutation q = sample_uniform(9, rng);
    EXPECT_EQ(distance(MetricKind::ulam, p, q), 9 - lis_length(compose(p, q.inverse())));
  }
}

TEST(Metrics, ClassicalMetricsAreSymmetricAndTriangular) {
  SeededRng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation a = sample_uniform(8, rng);
    const Permutation b = sample_uniform(8, rng);
    const Permutation c = sample_uniform(8, rng);
    for (MetricKind k : kClassicalMetrics) {
      EXPECT_EQ(distance(k, a, b), distance(k, b, a));
      if (k != MetricKind::rho_squared) {
        EXPECT_LE(distance(k, a, c), distance(k, a, b) + distance(k, b, c));
      }
    }
  }
}

TEST(GraphMetric, EqualsEdgeWeightOnS3) {
  for (const auto& p : enumerate(3)) {
    for (const auto& q : enumerate(3)) {
      EXPECT_EQ(descent_graph_distance(p, q), distance(MetricKind::descent_edge, p, q));
    }
  }
  EXPECT_DOUBLE_EQ(graph_edge_agreement(3), 1.0);
}

TEST(GraphMetric, AgreementFractionInUnitInterval) {
  const double f = graph_edge_agreement(5);
  EXPECT_GT(f, 0.0);
  EXPECT_LT(f, 1.0);
}

TEST(GraphMetric, CapEnforced) {
  EXPECT_THROW(descent_graph_distance(Permutation::identity(8), Permutation::identity(8)),
               CapExceeded);
}

TEST(GraphMetric, LexicographicRank) {
  std::size_t rank = 0;
  for (const auto& p : enumerate(5)) EXPECT_EQ(lexicographic_rank(p), rank++);
}

TEST(Violations, SmallSizes) {
  EXPECT_TRUE(search_triangle_violations(3).triples.empty());
  const auto report = search_triangle_violations(5);
  bool found = false;
  for (const auto& t : report.triples) {
    EXPECT_LT(t.d_pi_id + t.d_id_sigma, t.d_pi_sigma);
    if (t.pi == P("3 4 1 2 5") && t.sigma == P("1 4 5 2 3")) {
      found = true;
      EXPECT_EQ(t.d_pi_id, 2);
      EXPECT_EQ(t.d_id_sigma, 2);
      EXPECT_EQ(t.d_pi_sigma, 6);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(search_triangle_violations(7), CapExceeded);
}

TEST(Violations, MatchesExhaustiveScan) {
  const int n = 5;
  const Permutation id = Permutation::identity(n);
  std::size_t expected = 0;
  for (const auto& p : enumerate(n)) {
    for (const auto& q : enumerate(n)) {
      const double via = distance(MetricKind::descent_edge, p, id) +
                         distance(MetricKind::descent_edge, id, q);
      if (via < distance(MetricKind::descent_edge, p, q)) ++expected;
    }
  }
  EXPECT_EQ(search_triangle_violations(n).triples.size(), expected);
}

TEST(Invariance, ExpectedPattern) {
  SeededRng rng(12);
  const auto footrule = invariance_check(MetricKind::footrule, 500, rng);
  EXPECT_TRUE(footrule.right_invariant);
  EXPECT_FALSE(footrule.left_invariant);
  for (MetricKind k : {MetricKind::cayley, MetricKind::hamming}) {
    const auto r = invariance_check(k, 500, rng);
    EXPECT_TRUE(r.right_invariant);
    EXPECT_TRUE(r.left_invariant);
  }
  for (MetricKind k : {MetricKind::kendall, MetricKind::ulam, MetricKind::rho_squared,
                       MetricKind::descent_edge}) {
    const auto r = invariance_check(k, 500, rng);
    EXPECT_TRUE(r.right_invariant) << to_string(k);
    EXPECT_FALSE(r.left_invariant) << to_string(k);
  }
}

TEST(MetricKind, NamesRoundTrip) {
  for (MetricKind k : {MetricKind::footrule, MetricKind::rho_squared, MetricKind::kendall,
                       MetricKind::cayley, MetricKind::hamming, MetricKind::ulam,
                       MetricKind::descent_edge, MetricKind::descent_graph}) {
    EXPECT_EQ(metric_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(metric_kind_from_string("euclid"), InvalidArgument);
}

}  // namespace
}  // namespace permclt
