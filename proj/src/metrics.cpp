#include "permclt/metrics.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>

#include "permclt/error.hpp"
#include "permclt/stats.hpp"

namespace permclt {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::footrule:
      return "footrule";
    case MetricKind::rho_squared:
      return "rho_squared";
    case MetricKind::kendall:
      return "kendall";
    case MetricKind::cayley:
      return "cayley";
    case MetricKind::hamming:
      return "hamming";
    case MetricKind::ulam:
      return "ulam";
    case MetricKind::descent_edge:
      return "descent_edge";
    case MetricKind::descent_graph:
      return "descent_graph";
  }
  return "unknown";
}

MetricKind metric_kind_from_string(std::string_view name) {
  for (MetricKind k : {MetricKind::footrule, MetricKind::rho_squared, MetricKind::kendall,
                       MetricKind::cayley, MetricKind::hamming, MetricKind::ulam,
                       MetricKind::descent_edge, MetricKind::descent_graph}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgument("unknown metric \"" + std::string(name) + "\"");
}

namespace {

int descent_edge_weight(const Permutation& x) { return descents(x) + descents(x.inverse()); }

}  // namespace

double distance(MetricKind kind, const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("distance: size mismatch " + std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()));
  }
  const auto pv = p.values();
  const auto qv = q.values();
  switch (kind) {
    case MetricKind::footrule: {
      long sum = 0;
      for (std::size_t i = 0; i < pv.size(); ++i) sum += std::abs(pv[i] - qv[i]);
      return static_cast<double>(sum);
    }
    case MetricKind::rho_squared: {
      long sum = 0;
      for (std::size_t i = 0; i < pv.size(); ++i) {
        const long d = pv[i] - qv[i];
        sum += d * d;
      }
      return static_cast<double>(sum);
    }
    case MetricKind::hamming: {
      long sum = 0;
      for (std::size_t i = 0; i < pv.size(); ++i) sum += pv[i] != qv[i];
      return static_cast<double>(sum);
    }
    case MetricKind::kendall:
      return static_cast<double>(inversions(compose(q, p.inverse())));
    case MetricKind::cayley:
      return static_cast<double>(p.size() - cycle_count(compose(q, p.inverse())));
    case MetricKind::ulam:
      return static_cast<double>(p.size() - lis_length(compose(p, q.inverse())));
    case MetricKind::descent_edge:
      return static_cast<double>(descents(compose(p, q.inverse())) +
                                 descents(compose(q, p.inverse())));
    case MetricKind::descent_graph:
      throw InvalidArgument("distance: use descent_graph_distance for the graph metric");
  }
  throw InvalidArgument("distance: unknown metric");
}

std::size_t lexicographic_rank(const Permutation& p) { return pattern_index(p.values()); }

const std::vector<int>& descent_graph_distances_from_identity(int n) {
  if (n < 1) throw InvalidArgument("descent graph: n must be at least 1");
  if (n > kDescentGraphCap) throw CapExceeded("descent_graph_distance", n, kDescentGraphCap);

  static std::mutex mutex;
  static std::map<int, std::vector<int>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // The edge weight w(a, b) depends only on b∘a⁻¹, so a shortest path from p
  // to q maps to one from id to q∘p⁻¹. Dijkstra from id, edges generated on
  // the fly: u → x∘u with weight w(id, x).
  std::vector<Permutation> elements;
  std::vector<int> weight;
  for (const Permutation& x : enumerate(n, kDescentGraphCap)) {
    elements.push_back(x);
    weight.push_back(descent_edge_weight(x));
  }
  const std::size_t count = elements.size();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(count, kInf);
  std::vector<char> settled(count, 0);
  dist[0] = 0;
  std::vector<int> composed(static_cast<std::size_t>(n));
  for (std::size_t round = 0; round < count; ++round) {
    std::size_t u = count;
    for (std::size_t v = 0; v < count; ++v) {
      if (!settled[v] && dist[v] != kInf && (u == count || dist[v] < dist[u])) u = v;
    }
    if (u == count) break;
    settled[u] = 1;
    const auto uv = elements[u].values();
    for (std::size_t x = 1; x < count; ++x) {
      const int candidate = dist[u] + weight[x];
      const auto xv = elements[x].values();
      for (std::size_t i = 0; i < uv.size(); ++i) {
        composed[i] = xv[static_cast<std::size_t>(uv[i] - 1)];
      }
      const std::size_t target = pattern_index(composed);
      if (candidate < dist[target]) dist[target] = candidate;
    }
  }
  return cache.emplace(n, std::move(dist)).first->second;
}

int descent_graph_distance(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("descent_graph_distance: size mismatch");
  const auto& dist = descent_graph_distances_from_identity(p.size());
  return dist[lexicographic_rank(compose(q, p.inverse()))];
}

ViolationReport search_triangle_violations(int n, int cap) {
  if (n > cap) throw CapExceeded("search_triangle_violations", n, cap);
  ViolationReport report;
  report.n = n;
  std::vector<Permutation> all;
  std::vector<int> to_identity;
  const Permutation id = Permutation::identity(n);
  for (const Permutation& p : enumerate(n, cap)) {
    all.push_back(p);
    to_identity.push_back(descent_edge_weight(p));
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      const int via_identity = to_identity[a] + to_identity[b];
      // d(π,σ) ≤ 2(n−1) always, so most pairs are rejected before composing.
      if (via_identity >= 2 * (n - 1)) continue;
      const int direct = static_cast<int>(distance(MetricKind::descent_edge, all[a], all[b]));
      if (via_identity < direct) {
        report.triples.push_back({all[a], all[b], to_identity[a], to_identity[b], direct});
      }
    }
  }
  return report;
}

InvarianceResult invariance_check(MetricKind kind, int trials, SeededRng& rng, int n) {
  if (trials < 1) throw InvalidArgument("invariance_check: trials must be positive");
  if (kind == MetricKind::descent_graph && n > kDescentGraphCap) {
    throw CapExceeded("invariance_check(descent_graph)", n, kDescentGraphCap);
  }
  auto d = [kind](const Permutation& a, const Permutation& b) {
    if (kind == MetricKind::descent_graph) return static_cast<double>(descent_graph_distance(a, b));
    return distance(kind, a, b);
  };
  InvarianceResult result{true, true};
  for (int t = 0; t < trials; ++t) {
    const Permutation pi = sample_uniform(n, rng);
    const Permutation sigma = sample_uniform(n, rng);
    const Permutation eta = sample_uniform(n, rng);
    const double base = d(pi, sigma);
    if (d(compose(pi, eta), compose(sigma, eta)) != base) result.right_invariant = false;
    if (d(compose(eta, pi), compose(eta, sigma)) != base) result.left_invariant = false;
  }
  return result;
}

double graph_edge_agreement(int n) {
  const auto& dist = descent_graph_distances_from_identity(n);
  std::size_t equal = 0;
  std::size_t index = 0;
  for (const Permutation& x : enumerate(n, kDescentGraphCap)) {
    equal += dist[index++] == descent_edge_weight(x);
  }
  return static_cast<double>(equal) / static_cast<double>(dist.size());
}

}  // namespace permclt
