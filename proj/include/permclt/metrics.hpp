#pragma once

#include <string_view>
#include <vector>

#include "permclt/permutation.hpp"
#include "permclt/rng.hpp"

namespace permclt {

/// Largest n for the shortest-path descent metric (7! = 5040 vertices).
inline constexpr int kDescentGraphCap = 7;
/// Largest n for the exhaustive triangle-inequality scan (720² pairs).
inline constexpr int kViolationSearchCap = 6;

enum class MetricKind {
  footrule,
  rho_squared,
  kendall,
  cayley,
  hamming,
  ulam,
  descent_edge,
  descent_graph,
};

std::string_view to_string(MetricKind kind);
MetricKind metric_kind_from_string(std::string_view name);

/// The six classical metrics, right invariant by construction.
inline constexpr MetricKind kClassicalMetrics[] = {
    MetricKind::footrule, MetricKind::rho_squared, MetricKind::kendall,
    MetricKind::cayley,   MetricKind::hamming,     MetricKind::ulam,
};

/// d(p, q) for every kind except descent_graph.
///
/// footrule      Σ|p(i) − q(i)|
/// rho_squared   Σ(p(i) − q(i))², reported without the square root
/// kendall       inversions of q∘p⁻¹
/// cayley        n − cycles(q∘p⁻¹)
/// hamming       #{i : p(i) ≠ q(i)}
/// ulam          n − LIS(p∘q⁻¹)
/// descent_edge  D(p∘q⁻¹) + D(q∘p⁻¹)
double distance(MetricKind kind, const Permutation& p, const Permutation& q);

/// Shortest path between p and q in the complete graph on S_n whose edge
/// (a, b) weighs D(a∘b⁻¹) + D(b∘a⁻¹). n ≤ kDescentGraphCap.
int descent_graph_distance(const Permutation& p, const Permutation& q);

/// Graph distances from the identity to every element of S_n, indexed by
/// lexicographic rank. Cached per n after the first call.
const std::vector<int>& descent_graph_distances_from_identity(int n);

/// Lexicographic rank of p in S_n.
std::size_t lexicographic_rank(const Permutation& p);

struct TriangleViolation {
  Permutation pi;
  Permutation sigma;
  int d_pi_id;
  int d_id_sigma;
  int d_pi_sigma;
};

struct ViolationReport {
  int n = 0;
  std::vector<TriangleViolation> triples;
};

/// Every pair (π, σ) in S_n with d(π,id) + d(id,σ) < d(π,σ) for descent_edge.
ViolationReport search_triangle_violations(int n, int cap = kViolationSearchCap);

struct InvarianceResult {
  bool right_invariant;
  bool left_invariant;
};

/// Randomized check of d(π,σ) = d(πη,ση) and d(π,σ) = d(ηπ,ησ).
InvarianceResult invariance_check(MetricKind kind, int trials, SeededRng& rng, int n = 8);

/// Fraction of ordered pairs in S_n whose graph distance equals the edge
/// weight.
double graph_edge_agreement(int n);

}  // namespace permclt
