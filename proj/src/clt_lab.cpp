#include "permclt/clt_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iterator>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "permclt/error.hpp"
#include "permclt/normal.hpp"

namespace permclt {

namespace {

std::optional<ExactMoments> no_exact_moments(int) { return std::nullopt; }

}  // namespace

PairStatistic descent_stat() {
  PairStatistic s;
  s.name = "D";
  s.degree = 2;
  s.evaluate = [](std::span<const int> pi, std::span<const int>) {
    return static_cast<double>(descents(pi));
  };
  s.exact_moments = [](int n) -> std::optional<ExactMoments> {
    return ExactMoments{descent_mean_formula(n), descent_variance_formula(n), std::nullopt};
  };
  return s;
}

PairStatistic t_stat() {
  PairStatistic s;
  s.name = "T";
  s.degree = 2;
  s.evaluate = [](std::span<const int> pi, std::span<const int> inv) {
    return static_cast<double>(descents(pi) + descents(inv));
  };
  s.exact_moments = [](int n) -> std::optional<ExactMoments> {
    return ExactMoments{t_mean_formula(n), t_variance_formula(n), std::nullopt};
  };
  return s;
}

PairStatistic peaks_stat() {
  PairStatistic s;
  s.name = "peaks";
  s.degree = 3;
  s.evaluate = [](std::span<const int> pi, std::span<const int>) {
    return static_cast<double>(peaks(pi));
  };
  s.exact_moments = no_exact_moments;
  return s;
}

PairStatistic peaks_pair_stat() {
  PairStatistic s;
  s.name = "peaks_pair";
  s.degree = 3;
  s.evaluate = [](std::span<const int> pi, std::span<const int> inv) {
    return static_cast<double>(peaks(pi) + peaks(inv));
  };
  s.exact_moments = no_exact_moments;
  return s;
}

PairStatistic local_stat(LocalStatistic f, std::string name) {
  PairStatistic s;
  s.name = std::move(name);
  s.degree = f.degree();
  s.integer_valued = f.integer_valued();
  s.evaluate = [f = std::move(f)](std::span<const int> pi, std::span<const int>) {
    return eval_local(f, pi);
  };
  s.exact_moments = no_exact_moments;
  return s;
}

PairStatistic local_pair_stat(LocalStatistic f, LocalStatistic g, std::string name) {
  if (f.degree() != g.degree()) throw InvalidArgument("local_pair_stat: degrees differ");
  PairStatistic s;
  s.name = std::move(name);
  s.degree = f.degree();
  s.integer_valued = f.integer_valued() && g.integer_valued();
  s.evaluate = [f = std::move(f), g = std::move(g)](std::span<const int> pi,
                                                    std::span<const int> inv) {
    return eval_local(f, pi) + eval_local(g, inv);
  };
  s.exact_moments = no_exact_moments;
  return s;
}

PairStatistic statistic_by_name(const std::string& name) {
  if (name == "D") return descent_stat();
  if (name == "T") return t_stat();
  if (name == "peaks") return peaks_stat();
  if (name == "peaks_pair") return peaks_pair_stat();
  if (name.rfind("local:", 0) == 0) {
    const std::string path = name.substr(6);
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open local statistic file \"" + path + "\"");
    std::ostringstream text;
    text << in.rdbuf();
    return local_stat(LocalStatistic::from_json(text.str()), name);
  }
  throw InvalidArgument("unknown statistic \"" + name + "\"");
}

double evaluate_on_points(const PairStatistic& f, const PointConfiguration& cfg) {
  const auto [pi, sigma] = from_points(cfg);
  return f(pi, sigma);
}

InteractionGraph::InteractionGraph(int n, int threshold, std::vector<std::vector<int>> adjacency)
    : n_(n), threshold_(threshold), adjacency_(std::move(adjacency)) {}

bool InteractionGraph::has_edge(int i, int j) const {
  const auto& nb = adjacency_.at(static_cast<std::size_t>(i));
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<std::pair<int, int>> InteractionGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j : adjacency_[static_cast<std::size_t>(i)]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t InteractionGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

InteractionGraph build_graph(const PointConfiguration& cfg, int threshold) {
  if (threshold < 1) throw InvalidArgument("build_graph: threshold must be at least 1");
  const PointRanks ranks = rank_points(cfg.points());
  const auto n = static_cast<std::size_t>(cfg.size());
  std::vector<int> y_order(n);
  for (std::size_t k = 0; k < n; ++k) y_order[static_cast<std::size_t>(ranks.y_rank[k])] = static_cast<int>(k);

  std::vector<std::vector<int>> adjacency(n);
  auto link_within = [&](const std::vector<int>& order) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = r + 1; s < n && s <= r + static_cast<std::size_t>(threshold); ++s) {
        adjacency[static_cast<std::size_t>(order[r])].push_back(order[s]);
        adjacency[static_cast<std::size_t>(order[s])].push_back(order[r]);
      }
    }
  };
  link_within(ranks.x_order);
  link_within(y_order);
  for (auto& nb : adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return InteractionGraph(cfg.size(), threshold, std::move(adjacency));
}

int degree_bound(const InteractionGraph& g) {
  int best = 0;
  for (int v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

double delta_j(const PairStatistic& f, const PointConfiguration& cfg,
               const PointConfiguration& cfg_prime, std::size_t j) {
  if (cfg.size() != cfg_prime.size()) throw InvalidArgument("delta_j: size mismatch");
  if (j >= static_cast<std::size_t>(cfg.size())) throw InvalidArgument("delta_j: index out of range");
  return evaluate_on_points(f, cfg) - evaluate_on_points(f, cfg.with_replaced(j, cfg_prime[j]));
}

namespace {

unsigned resolve_threads(unsigned requested, std::size_t blocks) {
  unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(blocks, 1)));
}

/// Runs fn(block) for every block on a small pool. Block outputs must be
/// written to per-block slots so the merge order is fixed.
template <class Fn>
void for_each_block(std::size_t blocks, unsigned requested_threads, Fn&& fn) {
  const unsigned threads = resolve_threads(requested_threads, blocks);
  if (threads <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t b; (b = next.fetch_add(1)) < blocks;) fn(b);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(blocks);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

bool key_less(const Point& a, std::size_t ia, const Point& b, std::size_t ib, double Point::*key) {
  return a.*key < b.*key || (a.*key == b.*key && ia < ib);
}

/// 0-based rank of point k along `key`, index tie-breaking.
int rank_of(std::span<const Point> pts, std::size_t k, double Point::*key) {
  int r = 0;
  for (std::size_t m = 0; m < pts.size(); ++m) r += m != k && key_less(pts[m], m, pts[k], k, key);
  return r;
}

bool rank_adjacent(std::span<const Point> pts, std::size_t i, std::size_t j, int threshold) {
  const int dx = std::abs(rank_of(pts, i, &Point::u) - rank_of(pts, j, &Point::u));
  const int dy = std::abs(rank_of(pts, i, &Point::v) - rank_of(pts, j, &Point::v));
  return dx <= threshold || dy <= threshold;
}

void permutation_of(const PointRanks& ranks, std::vector<int>& pi, std::vector<int>& inverse) {
  const std::size_t n = ranks.x_order.size();
  pi.resize(n);
  inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int y = ranks.y_rank[static_cast<std::size_t>(ranks.x_order[i])];
    pi[i] = y + 1;
    inverse[static_cast<std::size_t>(y)] = static_cast<int>(i) + 1;
  }
}

/// π and π⁻¹ after replacing point j by p, in O(n) from the current ranks.
void replaced_permutation(std::span<const Point> pts, const PointRanks& ranks, std::size_t j,
                          const Point& p, std::vector<int>& pi, std::vector<int>& inverse) {
  const std::size_t n = pts.size();
  int new_x = 0;
  int new_y = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) continue;
    new_x += key_less(pts[k], k, p, j, &Point::u);
    new_y += key_less(pts[k], k, p, j, &Point::v);
  }
  const int old_y = ranks.y_rank[j];
  pi.resize(n);
  inverse.resize(n);
  std::size_t pos = 0;
  auto emit = [&](std::size_t idx) {
    int y;
    if (idx == j) {
      y = new_y;
    } else {
      y = ranks.y_rank[idx];
      y -= y > old_y;
      y += y >= new_y;
    }
    pi[pos] = y + 1;
    inverse[static_cast<std::size_t>(y)] = static_cast<int>(pos) + 1;
    ++pos;
  };
  for (int idx : ranks.x_order) {
    if (static_cast<std::size_t>(idx) == j) continue;
    if (pos == static_cast<std::size_t>(new_x)) emit(j);
    emit(static_cast<std::size_t>(idx));
  }
  if (pos == static_cast<std::size_t>(new_x)) emit(j);
}

bool same_value(double a, double b, bool integer_valued) {
  if (integer_valued) return a == b;
  return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a) + std::abs(b));
}

struct InteractionAccumulator {
  std::int64_t trials = 0;
  std::int64_t tested = 0;
  std::int64_t violations = 0;
  double max_abs_delta = 0.0;
  int delta = 0;
  int delta_single_axis = 0;
  double sum_delta = 0.0;
  double sum_m8 = 0.0;
  double sum_delta4 = 0.0;
  double sum_abs_delta = 0.0;
  std::vector<double> cube_sums;
};

constexpr std::int64_t kInteractionBlock = 256;
constexpr std::int64_t kMcBlock = 1024;

}  // namespace

InteractionReport check_interaction_rule(const PairStatistic& f, int n, std::int64_t trials,
                                         SeededRng& rng, int threshold,
                                         InteractionOptions options) {
  if (n < 2) throw InvalidArgument("check_interaction_rule: n must be at least 2");
  if (trials < 1) throw InvalidArgument("check_interaction_rule: trials must be positive");
  if (threshold < 1) throw InvalidArgument("check_interaction_rule: threshold must be at least 1");

  const int extension = threshold + 4;
  const std::uint64_t base = rng.next();
  const auto blocks = static_cast<std::size_t>((trials + kInteractionBlock - 1) / kInteractionBlock);
  std::vector<InteractionAccumulator> partial(blocks);
  const auto un = static_cast<std::size_t>(n);

  for_each_block(blocks, options.threads, [&](std::size_t b) {
    SeededRng local(derive_seed(base, b));
    InteractionAccumulator& acc = partial[b];
    acc.cube_sums.assign(un, 0.0);
    const std::int64_t first = static_cast<std::int64_t>(b) * kInteractionBlock;
    const std::int64_t last = std::min(trials, first + kInteractionBlock);

    std::vector<Point> x(un + 4);
    std::vector<Point> x_prime(un);
    std::vector<int> pi, inv;
    std::vector<double> replaced_value(un);

    for (std::int64_t t = first; t < last; ++t) {
      for (Point& p : x) p = {local.uniform(), local.uniform()};
      for (Point& p : x_prime) p = {local.uniform(), local.uniform()};
      const std::span<const Point> base_points(x.data(), un);

      const PointRanks ranks = rank_points(base_points);
      permutation_of(ranks, pi, inv);
      const double w = f.evaluate(pi, inv);

      double m = 0.0;
      for (std::size_t j = 0; j < un; ++j) {
        replaced_permutation(base_points, ranks, j, x_prime[j], pi, inv);
        replaced_value[j] = f.evaluate(pi, inv);
        const double d = std::abs(w - replaced_value[j]);
        m = std::max(m, d);
        acc.cube_sums[j] += d * d * d;
        acc.sum_abs_delta += d;
      }
      acc.max_abs_delta = std::max(acc.max_abs_delta, m);
      acc.sum_m8 += std::pow(m, 8);

      // δ: vertex 1 (index 0) in the extension graph on all n + 4 points.
      const PointRanks extended = rank_points(x);
      int x_neighbors = 0;
      int y_neighbors = 0;
      int neighbors = 0;
      for (std::size_t k = 1; k < x.size(); ++k) {
        const bool near_x = std::abs(extended.x_rank[k] - extended.x_rank[0]) <= extension;
        const bool near_y = std::abs(extended.y_rank[k] - extended.y_rank[0]) <= extension;
        x_neighbors += near_x;
        y_neighbors += near_y;
        neighbors += near_x || near_y;
      }
      const int delta = 1 + neighbors;
      acc.delta = std::max(acc.delta, delta);
      acc.delta_single_axis = std::max(acc.delta_single_axis, 1 + std::max(x_neighbors, y_neighbors));
      acc.sum_delta += delta;
      acc.sum_delta4 += std::pow(static_cast<double>(delta), 4);

      // Non-interaction identity for a random pair i ≠ j.
      const auto i = static_cast<std::size_t>(local.below(un));
      auto j = static_cast<std::size_t>(local.below(un - 1));
      j += j >= i;
      std::vector<Point> xi(base_points.begin(), base_points.end());
      xi[i] = x_prime[i];
      std::vector<Point> xj(base_points.begin(), base_points.end());
      xj[j] = x_prime[j];
      std::vector<Point> xij = xi;
      xij[j] = x_prime[j];
      const bool edge = rank_adjacent(base_points, i, j, threshold) ||
                        rank_adjacent(xi, i, j, threshold) ||
                        rank_adjacent(xj, i, j, threshold) ||
                        rank_adjacent(xij, i, j, threshold);
      ++acc.trials;
      if (!edge) {
        ++acc.tested;
        const PointRanks ranks_ij = rank_points(xij);
        permutation_of(ranks_ij, pi, inv);
        const double w_ij = f.evaluate(pi, inv);
        if (!same_value(w - replaced_value[j], replaced_value[i] - w_ij, f.integer_valued)) {
          ++acc.violations;
        }
      }
    }
  });

  InteractionReport report;
  report.statistic = f.name;
  report.n = n;
  report.trials = trials;
  report.seed = rng.seed();
  report.threshold = threshold;
  report.extension_threshold = extension;
  report.abs_delta_third_moments.assign(un, 0.0);
  double sum_delta = 0.0, sum_m8 = 0.0, sum_delta4 = 0.0, sum_abs = 0.0;
  for (const auto& acc : partial) {
    report.tested += acc.tested;
    report.violations += acc.violations;
    report.max_abs_delta = std::max(report.max_abs_delta, acc.max_abs_delta);
    report.delta = std::max(report.delta, acc.delta);
    report.delta_single_axis = std::max(report.delta_single_axis, acc.delta_single_axis);
    sum_delta += acc.sum_delta;
    sum_m8 += acc.sum_m8;
    sum_delta4 += acc.sum_delta4;
    sum_abs += acc.sum_abs_delta;
    for (std::size_t j = 0; j < un; ++j) report.abs_delta_third_moments[j] += acc.cube_sums[j];
  }
  const auto count = static_cast<double>(trials);
  for (double& c : report.abs_delta_third_moments) c /= count;
  report.mean_delta = sum_delta / count;
  report.m_moment8 = sum_m8 / count;
  report.delta_moment4 = sum_delta4 / count;
  report.mean_abs_delta = sum_abs / (count * static_cast<double>(n));
  return report;
}

Theorem4Terms theorem4_terms(double m_bound, double delta_bound, double sigma, int n,
                             std::span<const double> abs_delta_third_moments) {
  if (!(sigma > 0.0)) throw InvalidArgument("theorem4_terms: sigma must be positive");
  if (n < 1) throw InvalidArgument("theorem4_terms: n must be positive");
  Theorem4Terms terms;
  terms.term1 = std::sqrt(static_cast<double>(n)) / (sigma * sigma) * m_bound * m_bound * delta_bound;
  double third = 0.0;
  for (double v : abs_delta_third_moments) third += v;
  terms.term2 = third / (2.0 * sigma * sigma * sigma);
  return terms;
}

Theorem4Terms theorem4_terms(const InteractionReport& report, double sigma) {
  return theorem4_terms(std::pow(report.m_moment8, 0.125), std::pow(report.delta_moment4, 0.25),
                        sigma, report.n, report.abs_delta_third_moments);
}

namespace {

/// Draws one permutation and its inverse into the buffers.
class PermutationSource {
 public:
  PermutationSource(int n, Sampler sampler) : n_(static_cast<std::size_t>(n)), sampler_(sampler) {
    points_.resize(n_);
    pi_.resize(n_);
    inv_.resize(n_);
  }

  void draw(SeededRng& rng) {
    if (sampler_ == Sampler::points) {
      for (Point& p : points_) p = {rng.uniform(), rng.uniform()};
      permutation_of(rank_points(points_), pi_, inv_);
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) pi_[i] = static_cast<int>(i) + 1;
    for (std::size_t i = n_ - 1; i > 0; --i) {
      std::swap(pi_[i], pi_[static_cast<std::size_t>(rng.below(i + 1))]);
    }
    for (std::size_t i = 0; i < n_; ++i) inv_[static_cast<std::size_t>(pi_[i] - 1)] = static_cast<int>(i) + 1;
  }

  std::span<const int> pi() const { return pi_; }
  std::span<const int> inverse() const { return inv_; }

 private:
  std::size_t n_;
  Sampler sampler_;
  std::vector<Point> points_;
  std::vector<int> pi_;
  std::vector<int> inv_;
};

void check_mc_args(int n, std::int64_t samples, std::int64_t min_samples) {
  if (n < 2) throw InvalidArgument("Monte Carlo experiments need n >= 2");
  if (samples < min_samples) {
    throw InvalidArgument("Monte Carlo experiments need at least " + std::to_string(min_samples) +
                          " samples");
  }
}

std::pair<double, double> mean_and_sd(std::span<const double> xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
  return {mean, sd};
}

/// Evaluates a vector-valued function of (π, π⁻¹) on `samples` draws.
template <std::size_t Width, class Fn>
std::vector<std::array<double, Width>> draw_samples(int n, std::int64_t samples, SeededRng& rng,
                                                    const McOptions& options, Fn&& fn) {
  const std::uint64_t base = rng.next();
  const auto blocks = static_cast<std::size_t>((samples + kMcBlock - 1) / kMcBlock);
  std::vector<std::array<double, Width>> out(static_cast<std::size_t>(samples));
  for_each_block(blocks, options.threads, [&](std::size_t b) {
    SeededRng local(derive_seed(base, b));
    PermutationSource source(n, options.sampler);
    const std::int64_t first = static_cast<std::int64_t>(b) * kMcBlock;
    const std::int64_t last = std::min(samples, first + kMcBlock);
    for (std::int64_t s = first; s < last; ++s) {
      source.draw(local);
      out[static_cast<std::size_t>(s)] = fn(source.pi(), source.inverse());
    }
  });
  return out;
}

}  // namespace

McResult mc_statistic(const PairStatistic& stat, int n, std::int64_t samples, SeededRng& rng,
                      McOptions options) {
  check_mc_args(n, samples, 2);
  const auto draws = draw_samples<1>(n, samples, rng, options,
                                     [&](std::span<const int> pi, std::span<const int> inv) {
                                       return std::array<double, 1>{stat.evaluate(pi, inv)};
                                     });
  std::vector<double> raw(draws.size());
  std::transform(draws.begin(), draws.end(), raw.begin(), [](const auto& a) { return a[0]; });

  McResult result;
  McReport& report = result.report;
  report.statistic = stat.name;
  report.n = n;
  report.samples = samples;
  report.seed = rng.seed();
  std::tie(report.mean, report.sd) = mean_and_sd(raw);

  const auto exact = stat.exact_moments ? stat.exact_moments(n) : std::nullopt;
  if (exact) {
    report.standardization = "exact";
    report.center = exact->mean.get_d();
    report.scale = std::sqrt(exact->variance.get_d());
  } else {
    report.standardization = "sample";
    report.center = report.mean;
    report.scale = report.sd;
  }
  if (!(report.scale > 0.0)) throw InvalidArgument("mc_statistic: statistic has zero spread");

  std::vector<double> z(raw.size());
  std::transform(raw.begin(), raw.end(), z.begin(),
                 [&](double x) { return (x - report.center) / report.scale; });
  std::sort(z.begin(), z.end());
  report.ks = ks_to_normal(z);
  report.w1 = w1_to_normal(z);
  if (options.keep_samples) result.raw = std::move(raw);
  return result;
}

BivariateReport bivariate_experiment(int n, std::int64_t samples, SeededRng& rng,
                                     McOptions options) {
  check_mc_args(n, samples, 2);
  const auto draws = draw_samples<2>(n, samples, rng, options,
                                     [](std::span<const int> pi, std::span<const int> inv) {
                                       return std::array<double, 2>{
                                           static_cast<double>(descents(pi)),
                                           static_cast<double>(descents(inv))};
                                     });
  const double center = descent_mean_formula(n).get_d();
  const double scale = std::sqrt(descent_variance_formula(n).get_d());
  std::vector<double> a(draws.size());
  std::vector<double> b(draws.size());
  for (std::size_t s = 0; s < draws.size(); ++s) {
    a[s] = (draws[s][0] - center) / scale;
    b[s] = (draws[s][1] - center) / scale;
  }
  const auto [mean_a, sd_a] = mean_and_sd(a);
  const auto [mean_b, sd_b] = mean_and_sd(b);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    sxx += (a[s] - mean_a) * (a[s] - mean_a);
    syy += (b[s] - mean_b) * (b[s] - mean_b);
    sxy += (a[s] - mean_a) * (b[s] - mean_b);
  }

  BivariateReport report;
  report.n = n;
  report.samples = samples;
  report.seed = rng.seed();
  report.corr = (sxx > 0.0 && syy > 0.0) ? sxy / std::sqrt(sxx * syy) : 0.0;
  report.exact_corr = mpq_class(descent_covariance_formula(n) / descent_variance_formula(n)).get_d();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  report.ks_descents = ks_to_normal(a);
  report.ks_inverse_descents = ks_to_normal(b);
  return report;
}

CoincidenceReport coincidence_rate(int n, std::int64_t samples, SeededRng& rng,
                                   McOptions options) {
  if (n < 1) throw InvalidArgument("coincidence_rate: n must be at least 1");
  if (samples < 1) throw InvalidArgument("coincidence_rate: samples must be positive");
  CoincidenceReport report;
  report.n = n;
  report.samples = samples;
  report.seed = rng.seed();
  if (n == 1) {
    report.rate = 1.0;
  } else {
    const auto draws = draw_samples<1>(n, samples, rng, options,
                                       [](std::span<const int> pi, std::span<const int> inv) {
                                         return std::array<double, 1>{
                                             descents(pi) == descents(inv) ? 1.0 : 0.0};
                                       });
    double hits = 0.0;
    for (const auto& d : draws) hits += d[0];
    report.rate = hits / static_cast<double>(samples);
  }
  report.rate_times_sqrt_n = report.rate * std::sqrt(static_cast<double>(n));
  return report;
}

}  // namespace permclt
