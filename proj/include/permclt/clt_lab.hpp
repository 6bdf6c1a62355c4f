#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permclt/exact.hpp"
#include "permclt/permutation.hpp"
#include "permclt/rng.hpp"
#include "permclt/stats.hpp"

namespace permclt {

/// A statistic W = F(π) + G(π⁻¹) evaluated on one-line notations.
struct PairStatistic {
  std::string name;
  /// Window width k of the local components; the interaction graph uses
  /// rank threshold k − 1.
  int degree = 2;
  bool integer_valued = true;
  std::function<double(std::span<const int> pi, std::span<const int> pi_inverse)> evaluate;
  /// Exact mean and variance for size n, when a closed form exists.
  std::function<std::optional<ExactMoments>(int n)> exact_moments;

  double operator()(const Permutation& pi, const Permutation& pi_inverse) const {
    return evaluate(pi.values(), pi_inverse.values());
  }
};

/// D(π).
PairStatistic descent_stat();
/// T(π) = D(π) + D(π⁻¹).
PairStatistic t_stat();
/// peaks(π).
PairStatistic peaks_stat();
/// peaks(π) + peaks(π⁻¹).
PairStatistic peaks_pair_stat();
/// F(π) for a local statistic F.
PairStatistic local_stat(LocalStatistic f, std::string name = "local");
/// F(π) + G(π⁻¹). F and G must share a degree.
PairStatistic local_pair_stat(LocalStatistic f, LocalStatistic g, std::string name = "local_pair");

/// "D", "T", "peaks", "peaks_pair", or "local:<path>" (F(π) from a JSON file).
PairStatistic statistic_by_name(const std::string& name);

/// W as a function of a point configuration, through from_points.
double evaluate_on_points(const PairStatistic& f, const PointConfiguration& cfg);

/// Rank-difference graph: {i, j} is an edge iff the x-ranks or the y-ranks
/// of points i and j differ by at most `threshold`. Vertices are 0-based.
class InteractionGraph {
 public:
  InteractionGraph(int n, int threshold, std::vector<std::vector<int>> adjacency);

  int size() const noexcept { return n_; }
  int threshold() const noexcept { return threshold_; }
  bool has_edge(int i, int j) const;
  int degree(int v) const { return static_cast<int>(adjacency_.at(static_cast<std::size_t>(v)).size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  /// Edges {i, j} with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

 private:
  int n_;
  int threshold_;
  std::vector<std::vector<int>> adjacency_;
};

InteractionGraph build_graph(const PointConfiguration& cfg, int threshold);

/// Maximum vertex degree; at most 4·threshold.
int degree_bound(const InteractionGraph& g);

/// W(cfg) − W(cfg with point j replaced by cfg′_j); j is 0-based.
double delta_j(const PairStatistic& f, const PointConfiguration& cfg,
               const PointConfiguration& cfg_prime, std::size_t j);

struct InteractionOptions {
  /// Worker threads; 0 means all hardware threads. Results do not depend on it.
  unsigned threads = 0;
};

/// Outcome of a randomized check of the interaction rule for W.
struct InteractionReport {
  std::string statistic;
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int threshold = 0;
  int extension_threshold = 0;
  /// Trials where {i, j} was absent from all four graphs (identity tested).
  std::int64_t tested = 0;
  std::int64_t violations = 0;
  /// max over trials of max_j |Δ_j W|.
  double max_abs_delta = 0.0;
  /// max over trials of 1 + degree of vertex 1 in the extension graph on n+4 points.
  int delta = 0;
  /// max over trials of 1 + the larger single-axis neighbour count of vertex 1.
  int delta_single_axis = 0;
  double mean_delta = 0.0;
  /// E(M⁸) and E(δ⁴) over trials.
  double m_moment8 = 0.0;
  double delta_moment4 = 0.0;
  /// E|Δ_j W|³ for j = 1..n.
  std::vector<double> abs_delta_third_moments;
  double mean_abs_delta = 0.0;
};

InteractionReport check_interaction_rule(const PairStatistic& f, int n, std::int64_t trials,
                                         SeededRng& rng, int threshold,
                                         InteractionOptions options = {});

/// The two terms of the normal-approximation bound, with the universal
/// constant of the first term left out (it is unknown).
struct Theorem4Terms {
  double term1 = 0.0;  ///< √n σ⁻² E(M⁸)^{1/4} E(δ⁴)^{1/4}, to be multiplied by C
  double term2 = 0.0;  ///< (2σ³)⁻¹ Σ_j E|Δ_j W|³
};

/// Bounds M and δ stand in for E(M⁸)^{1/4} = M² and E(δ⁴)^{1/4} = δ.
Theorem4Terms theorem4_terms(double m_bound, double delta_bound, double sigma, int n,
                             std::span<const double> abs_delta_third_moments);

/// Same, from measured moments in a report.
Theorem4Terms theorem4_terms(const InteractionReport& report, double sigma);

enum class Sampler {
  points,   ///< ranks of i.i.d. uniform points in the unit square
  shuffle,  ///< Fisher–Yates
};

struct McOptions {
  unsigned threads = 0;
  Sampler sampler = Sampler::points;
  bool keep_samples = false;
};

struct McReport {
  std::string statistic;
  int n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;  ///< sample mean of raw values
  double sd = 0.0;    ///< sample standard deviation of raw values
  /// "exact" when closed-form moments standardize the values, else "sample".
  std::string standardization;
  double center = 0.0;
  double scale = 0.0;
  double ks = 0.0;
  double w1 = 0.0;
};

struct McResult {
  McReport report;
  std::vector<double> raw;  ///< filled when keep_samples is set
};

McResult mc_statistic(const PairStatistic& stat, int n, std::int64_t samples, SeededRng& rng,
                      McOptions options = {});

struct BivariateReport {
  int n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double corr = 0.0;
  double exact_corr = 0.0;
  double ks_descents = 0.0;
  double ks_inverse_descents = 0.0;
};

/// Samples (D(π), D(π⁻¹)), standardizes each by the exact moments and
/// reports their correlation and marginal Kolmogorov distances.
BivariateReport bivariate_experiment(int n, std::int64_t samples, SeededRng& rng,
                                     McOptions options = {});

struct CoincidenceReport {
  int n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double rate = 0.0;
  double rate_times_sqrt_n = 0.0;
};

/// Empirical P(D(π) = D(π⁻¹)).
CoincidenceReport coincidence_rate(int n, std::int64_t samples, SeededRng& rng,
                                   McOptions options = {});

}  // namespace permclt
