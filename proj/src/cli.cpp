#include "permclt/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permclt/clt_lab.hpp"
#include "permclt/error.hpp"
#include "permclt/exact.hpp"
#include "permclt/metrics.hpp"
#include "permclt/report_io.hpp"
#include "permclt/stats.hpp"

namespace permclt::cli {

namespace {

using nlohmann::json;

struct Options {
  int n = 8;
  std::string stat = "T";
  std::int64_t samples = 100000;
  std::int64_t trials = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string format = "json";
  std::string method = "gf";
  std::string out;
  std::string kind;
  std::string p;
  std::string q;
  std::optional<int> j;
  std::optional<int> big_k;
  std::optional<int> threshold;
  std::string sampler = "points";
  std::string raw_csv;
  std::vector<int> ns{100, 1000, 10000};
  double m_bound = 4.0;
  double delta_bound = 10.0;
};

struct Output {
  json doc;
  std::string csv;  // empty: flatten doc as field,value
};

std::string scalar_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string flatten_csv(const json& doc) {
  std::ostringstream out;
  out << "field,value\n";
  for (const auto& [key, value] : doc.items()) {
    if (value.is_structured()) continue;
    out << key << ',' << scalar_string(value) << '\n';
  }
  return out.str();
}

std::string rows_csv(const json& rows, const std::vector<std::string>& columns) {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << scalar_string(row.at(columns[c]));
    }
    out << '\n';
  }
  return out.str();
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("PERMCLT_SEED")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("PERMCLT_SEED must be an unsigned integer");
  }
  return kDefaultSeed;
}

Sampler parse_sampler(const std::string& s) {
  if (s == "points") return Sampler::points;
  if (s == "shuffle") return Sampler::shuffle;
  throw InvalidArgument("unknown sampler \"" + s + "\"");
}

std::function<long(const Permutation&)> integer_statistic(const std::string& name) {
  if (name == "D") return [](const Permutation& p) { return static_cast<long>(descents(p)); };
  if (name == "T") return [](const Permutation& p) { return static_cast<long>(t_statistic(p)); };
  if (name == "peaks") return [](const Permutation& p) { return static_cast<long>(peaks(p)); };
  if (name == "peaks_pair") {
    return [](const Permutation& p) { return static_cast<long>(peaks(p) + peaks(p.inverse())); };
  }
  if (name.rfind("local:", 0) == 0) {
    PairStatistic stat = statistic_by_name(name);
    if (!stat.integer_valued) throw InvalidArgument("exact laws need an integer-valued statistic");
    return [stat](const Permutation& p) { return std::lround(stat(p, p.inverse())); };
  }
  throw InvalidArgument("exact laws are available for D, T, peaks, peaks_pair and local:<file>, "
                        "not \"" + name + "\"");
}

ExactDistribution exact_law(const Options& o) {
  if (o.stat == "D" && o.method != "brute") return eulerian_row(o.n);
  if (o.stat == "T" && o.method != "brute") {
    return t_distribution(bivariate_table(o.n, table_method_from_string(o.method)));
  }
  return brute_distribution(o.n, integer_statistic(o.stat));
}

// exact ------------------------------------------------------------------

Output exact_eulerian(const Options& o) {
  Output r;
  r.doc = to_json(eulerian_row(o.n));
  r.csv = rows_csv(r.doc["values"], {"value", "count"});
  return r;
}

Output exact_bivariate(const Options& o) {
  const auto table = bivariate_table(o.n, table_method_from_string(o.method));
  return {to_json(table), table_csv(table)};
}

Output exact_tdist(const Options& o) {
  const auto table = bivariate_table(o.n, table_method_from_string(o.method));
  Output r;
  r.doc = to_json(t_distribution(table));
  r.doc["method"] = std::string(to_string(table.method()));
  r.csv = rows_csv(r.doc["values"], {"value", "count"});
  return r;
}

Output exact_moments(const Options& o) {
  const ExactMoments m = moments(exact_law(o));
  Output r;
  r.doc = to_json(m);
  r.doc["statistic"] = o.stat;
  r.doc["n"] = o.n;
  if (o.stat == "D" || o.stat == "T") {
    const bool is_t = o.stat == "T";
    const mpq_class mean_formula = is_t ? t_mean_formula(o.n) : descent_mean_formula(o.n);
    const mpq_class var_formula = is_t ? t_variance_formula(o.n) : descent_variance_formula(o.n);
    r.doc["mean_formula"] = rational_string(mean_formula);
    r.doc["variance_formula"] = rational_string(var_formula);
    r.doc["matches_formula"] = m.mean == mean_formula && m.variance == var_formula;
  }
  return r;
}

Output exact_covariance(const Options& o) {
  Output r;
  r.doc["n"] = o.n;
  r.doc["method"] = o.method;
  if (o.method == "brute") {
    r.doc["product_mean"] = rational_string(descent_product_mean_exact(o.n));
    r.doc["covariance"] = rational_string(descent_covariance_exact(o.n));
  } else {
    const auto table = bivariate_table(o.n, table_method_from_string(o.method));
    const ExactMoments m = joint_moments(table);
    r.doc["product_mean"] = rational_string(*m.covariance + m.mean * m.mean);
    r.doc["covariance"] = rational_string(*m.covariance);
  }
  r.doc["formula"] = rational_string(descent_covariance_formula(o.n));
  r.doc["matches_formula"] = r.doc["covariance"] == r.doc["formula"];
  return r;
}

Output exact_euler_identity(const Options& o) {
  const int k = o.big_k.value_or(o.n + 12);
  Output r;
  r.doc = {{"n", o.n}, {"K", k}, {"holds", verify_euler_identity(o.n, k)}};
  return r;
}

Output exact_stanley(const Options& o) {
  const ExactDistribution row = eulerian_row(o.n);
  const mpz_class fact = factorial_mpz(o.n);
  Output r;
  r.doc["n"] = o.n;
  r.doc["cells"] = json::array();
  bool all = true;
  for (int j = 0; j < o.n; ++j) {
    if (o.j && *o.j != j) continue;
    const mpq_class cell = irwin_hall_cell(o.n, j);
    const mpz_class eulerian = row.count(j);
    const bool match = cell * fact == mpq_class(eulerian);
    all = all && match;
    r.doc["cells"].push_back({{"j", j},
                              {"probability", rational_string(cell)},
                              {"eulerian", eulerian.get_str()},
                              {"matches", match}});
  }
  if (o.j && (*o.j < 0 || *o.j >= o.n)) throw InvalidArgument("--j must lie in 0..n-1");
  r.doc["all_match"] = all;
  r.csv = rows_csv(r.doc["cells"], {"j", "probability", "eulerian", "matches"});
  return r;
}

Output exact_carlitz(const Options& o) {
  const auto table = bivariate_table(o.n, table_method_from_string(o.method));
  auto cells = [](const std::vector<CarlitzCell>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back({{"r", c.r}, {"s", c.s}, {"count", c.count.get_str()}});
    return a;
  };
  const auto sharp = carlitz_mismatches(table, CarlitzForm::sharp);
  const auto displayed = carlitz_mismatches(table, CarlitzForm::displayed);
  Output r;
  r.doc = {{"n", o.n},
           {"method", std::string(to_string(table.method()))},
           {"sharp_holds", sharp.empty()},
           {"displayed_holds", displayed.empty()},
           {"sharp_mismatches", cells(sharp)},
           {"displayed_mismatches", cells(displayed)}};
  return r;
}

Output exact_pitman(const Options& o) {
  if (o.n < 2) throw InvalidArgument("pitman check needs n >= 2");
  const double ks = kolmogorov_to_normal(eulerian_row(o.n), descent_mean_formula(o.n),
                                         std::sqrt(descent_variance_formula(o.n).get_d()));
  const double bound = std::sqrt(12.0 / o.n);
  Output r;
  r.doc = {{"n", o.n}, {"ks", ks}, {"bound", bound}, {"within_bound", ks <= bound}};
  return r;
}

// metric -----------------------------------------------------------------

Output metric_dist(const Options& o) {
  const Permutation p = Permutation::parse(o.p);
  const Permutation q = Permutation::parse(o.q);
  const MetricKind kind = metric_kind_from_string(o.kind);
  const double d = kind == MetricKind::descent_graph ? descent_graph_distance(p, q)
                                                      : distance(kind, p, q);
  Output r;
  r.doc = {{"kind", o.kind}, {"pi", p.to_string()}, {"sigma", q.to_string()}, {"distance", d}};
  return r;
}

Output metric_graph_dist(const Options& o) {
  const Permutation p = Permutation::parse(o.p);
  const Permutation q = Permutation::parse(o.q);
  Output r;
  r.doc = {{"pi", p.to_string()},
           {"sigma", q.to_string()},
           {"graph_distance", descent_graph_distance(p, q)},
           {"edge_weight", distance(MetricKind::descent_edge, p, q)}};
  return r;
}

Output metric_violations(const Options& o) {
  const auto report = search_triangle_violations(o.n);
  return {to_json(report), violations_csv(report)};
}

Output metric_invariance(const Options& o) {
  SeededRng rng(resolve_seed(o));
  std::vector<MetricKind> kinds;
  if (o.kind.empty()) {
    kinds.assign(std::begin(kClassicalMetrics), std::end(kClassicalMetrics));
    kinds.push_back(MetricKind::descent_edge);
  } else {
    kinds.push_back(metric_kind_from_string(o.kind));
  }
  const int trials = static_cast<int>(o.trials);
  Output r;
  r.doc = {{"n", o.n}, {"trials", trials}, {"seed", rng.seed()}, {"results", json::array()}};
  for (MetricKind k : kinds) {
    const auto res = invariance_check(k, trials, rng, o.n);
    r.doc["results"].push_back({{"kind", std::string(to_string(k))},
                                {"right_invariant", res.right_invariant},
                                {"left_invariant", res.left_invariant}});
  }
  r.csv = rows_csv(r.doc["results"], {"kind", "right_invariant", "left_invariant"});
  return r;
}

// mc ---------------------------------------------------------------------

McOptions mc_options(const Options& o) {
  McOptions m;
  m.threads = o.threads;
  m.sampler = parse_sampler(o.sampler);
  m.keep_samples = !o.raw_csv.empty();
  return m;
}

Output mc_clt(const Options& o) {
  SeededRng rng(resolve_seed(o));
  const McResult result = mc_statistic(statistic_by_name(o.stat), o.n, o.samples, rng, mc_options(o));
  if (!o.raw_csv.empty()) {
    std::ofstream raw(o.raw_csv);
    if (!raw) throw std::runtime_error("cannot write " + o.raw_csv);
    raw << "value\n";
    for (double v : result.raw) raw << v << '\n';
  }
  return {to_json(result.report), {}};
}

Output mc_bivariate(const Options& o) {
  SeededRng rng(resolve_seed(o));
  return {to_json(bivariate_experiment(o.n, o.samples, rng, mc_options(o))), {}};
}

Output mc_coincidence(const Options& o) {
  SeededRng rng(resolve_seed(o));
  return {to_json(coincidence_rate(o.n, o.samples, rng, mc_options(o))), {}};
}

// verify -----------------------------------------------------------------

Output verify_interaction(const Options& o) {
  SeededRng rng(resolve_seed(o));
  const PairStatistic stat = statistic_by_name(o.stat);
  const int threshold = o.threshold.value_or(stat.degree - 1);
  InteractionOptions opts;
  opts.threads = o.threads;
  const auto report = check_interaction_rule(stat, o.n, o.trials, rng, threshold, opts);
  Output r;
  r.doc = to_json(report);
  return r;
}

Output verify_theorem4_scaling(const Options& o) {
  if (o.ns.size() < 2) throw InvalidArgument("--ns needs at least two sizes");
  Output r;
  r.doc = {{"statistic", "T"},
           {"M_bound", o.m_bound},
           {"delta_bound", o.delta_bound},
           {"points", json::array()}};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int n : o.ns) {
    if (n < 2) throw InvalidArgument("--ns entries must be at least 2");
    const double sigma2 = t_variance_formula(n).get_d();
    const auto terms = theorem4_terms(o.m_bound, o.delta_bound, std::sqrt(sigma2), n, {});
    r.doc["points"].push_back({{"n", n}, {"sigma2", sigma2}, {"term1", terms.term1}});
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(terms.term1);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(o.ns.size());
  r.doc["slope"] = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  r.csv = rows_csv(r.doc["points"], {"n", "sigma2", "term1"});
  return r;
}

// wiring -----------------------------------------------------------------

struct Wiring {
  CLI::App* sub;
  std::function<Output(const Options&)> action;
  std::string name;
};

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write output to a file instead of stdout");
}

void add_seed_flags(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "RNG seed (overrides PERMCLT_SEED)");
  sub->add_option("--threads", o.threads, "Worker threads, 0 = all cores");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Permutation descent statistics: exact laws, metrics and CLT experiments", "permclt"};
  app.require_subcommand(1);
  std::vector<Wiring> wiring;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  std::function<Output(const Options&)> action) {
    CLI::App* sub = group->add_subcommand(name, help);
    add_output_flags(sub, o);
    wiring.push_back({sub, std::move(action), group->get_name() + " " + name});
    return sub;
  };
  auto method_flag = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "Table construction method")
        ->check(CLI::IsMember({"brute", "gf", "recurrence"}));
  };

  CLI::App* exact = app.add_subcommand("exact", "Exact laws and identities");
  exact->require_subcommand(1);
  CLI::App* metric = app.add_subcommand("metric", "Metrics on permutations");
  metric->require_subcommand(1);
  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  mc->require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Interaction-graph checks");
  verify->require_subcommand(1);

  auto* s = leaf(exact, "eulerian", "Eulerian numbers A(n,1..n)", exact_eulerian);
  s->add_option("--n", o.n)->required();
  s = leaf(exact, "bivariate", "Joint descent table A(n,r,s)", exact_bivariate);
  s->add_option("--n", o.n)->required();
  method_flag(s);
  s = leaf(exact, "tdist", "Exact law of T = D(p) + D(p^-1)", exact_tdist);
  s->add_option("--n", o.n)->required();
  method_flag(s);
  s = leaf(exact, "moments", "Exact mean and variance", exact_moments);
  s->add_option("--n", o.n)->required();
  s->add_option("--stat", o.stat, "D, T, peaks or peaks_pair");
  method_flag(s);
  s = leaf(exact, "covariance", "Cov(D(p), D(p^-1))", exact_covariance);
  s->add_option("--n", o.n)->required();
  method_flag(s);
  s = leaf(exact, "euler-identity", "Check sum k^n t^k = A_n(t)/(1-t)^(n+1)", exact_euler_identity);
  s->add_option("--n", o.n)->required();
  s->add_option("--K", o.big_k, "Highest coefficient checked (default n+12)");
  s = leaf(exact, "stanley", "Irwin-Hall cells against Eulerian numbers", exact_stanley);
  s->add_option("--n", o.n)->required();
  s->add_option("--j", o.j, "Single cell j (default all)");
  s = leaf(exact, "carlitz", "Support rule for A(n,r,s)", exact_carlitz);
  s->add_option("--n", o.n)->required();
  method_flag(s);
  s = leaf(exact, "pitman", "Kolmogorov distance of D to the normal", exact_pitman);
  s->add_option("--n", o.n)->required();

  s = leaf(metric, "dist", "Distance between two permutations", metric_dist);
  s->add_option("--kind", o.kind)->required();
  s->add_option("--p", o.p, "First permutation, e.g. \"3 4 1 2 5\"")->required();
  s->add_option("--q", o.q, "Second permutation")->required();
  s = leaf(metric, "graph-dist", "Shortest-path descent metric", metric_graph_dist);
  s->add_option("--p", o.p)->required();
  s->add_option("--q", o.q)->required();
  s = leaf(metric, "violations", "Triangle-inequality failures of the descent edge metric",
           metric_violations);
  s->add_option("--n", o.n)->required();
  s = leaf(metric, "invariance", "Randomized left/right invariance check", metric_invariance);
  s->add_option("--kind", o.kind, "Metric (default: all but descent_graph)");
  s->add_option("--n", o.n, "Permutation size");
  s->add_option("--trials", o.trials, "Random triples")->default_val(1000);
  add_seed_flags(s, o);

  auto mc_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n)->required();
    sub->add_option("--samples", o.samples, "Number of sampled permutations");
    sub->add_option("--sampler", o.sampler, "points or shuffle")
        ->check(CLI::IsMember({"points", "shuffle"}));
    add_seed_flags(sub, o);
  };
  s = leaf(mc, "clt", "Kolmogorov and Wasserstein distances to N(0,1)", mc_clt);
  mc_flags(s);
  s->add_option("--stat", o.stat, "D, T, peaks, peaks_pair or local:<file>");
  s->add_option("--raw-csv", o.raw_csv, "Also write raw sampled values to this CSV file");
  s = leaf(mc, "bivariate", "Joint behaviour of D(p) and D(p^-1)", mc_bivariate);
  mc_flags(s);
  s = leaf(mc, "coincidence", "Empirical P(D(p) = D(p^-1))", mc_coincidence);
  mc_flags(s);

  s = leaf(verify, "interaction", "Randomized interaction-rule check", verify_interaction);
  s->add_option("--n", o.n)->required();
  s->add_option("--stat", o.stat, "D, T, peaks, peaks_pair or local:<file>");
  s->add_option("--trials", o.trials, "Random trials");
  s->add_option("--threshold", o.threshold, "Rank threshold (default degree-1)");
  add_seed_flags(s, o);
  s = leaf(verify, "theorem4-scaling", "Scaling of the first bound term for T",
           verify_theorem4_scaling);
  s->add_option("--ns", o.ns, "Sizes to evaluate")->delimiter(',');
  s->add_option("--M-bound", o.m_bound, "Bound on max |Delta_j W|");
  s->add_option("--delta-bound", o.delta_bound, "Bound on delta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "permclt: " << e.what() << '\n';
    return 2;
  }

  const Wiring* chosen = nullptr;
  for (const auto& w : wiring) {
    if (w.sub->parsed()) chosen = &w;
  }
  if (chosen == nullptr) {
    err << "permclt: no command given\n";
    return 2;
  }

  try {
    Output result = chosen->action(o);
    result.doc["command"] = chosen->name;
    std::string text;
    if (o.format == "csv") {
      text = result.csv.empty() ? flatten_csv(result.doc) : result.csv;
    } else {
      text = result.doc.dump(2) + "\n";
    }
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file) throw std::runtime_error("cannot write " + o.out);
      file << text;
    }
    return 0;
  } catch (const InvalidArgument& e) {
    err << "permclt: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "permclt: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "permclt: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace permclt::cli
