#include "permclt/report_io.hpp"

#include <numeric>
#include <sstream>

namespace permclt {

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

nlohmann::json to_json(const ExactDistribution& dist) {
  nlohmann::json j;
  j["n"] = dist.n;
  j["values"] = nlohmann::json::array();
  for (const auto& [value, count] : dist.values) {
    j["values"].push_back({{"value", value}, {"count", count.get_str()}});
  }
  j["total"] = dist.total().get_str();
  return j;
}

nlohmann::json to_json(const BivariateDescentTable& table) {
  nlohmann::json j;
  j["n"] = table.n();
  j["method"] = std::string(to_string(table.method()));
  j["cells"] = nlohmann::json::array();
  for (int r = 1; r <= table.n(); ++r) {
    for (int s = 1; s <= table.n(); ++s) {
      j["cells"].push_back({{"r", r}, {"s", s}, {"count", table.at(r, s).get_str()}});
    }
  }
  return j;
}

nlohmann::json to_json(const ExactMoments& m) {
  nlohmann::json j;
  j["mean"] = rational_string(m.mean);
  j["variance"] = rational_string(m.variance);
  if (m.covariance) j["covariance"] = rational_string(*m.covariance);
  return j;
}

nlohmann::json to_json(const ViolationReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["count"] = report.triples.size();
  j["triples"] = nlohmann::json::array();
  for (const auto& t : report.triples) {
    j["triples"].push_back({{"pi", t.pi.to_string()},
                            {"sigma", t.sigma.to_string()},
                            {"d_pi_id", t.d_pi_id},
                            {"d_id_sigma", t.d_id_sigma},
                            {"d_pi_sigma", t.d_pi_sigma}});
  }
  return j;
}

nlohmann::json to_json(const McReport& r) {
  return {{"statistic", r.statistic}, {"n", r.n},
          {"samples", r.samples},     {"seed", r.seed},
          {"mean", r.mean},           {"sd", r.sd},
          {"standardization", r.standardization},
          {"center", r.center},       {"scale", r.scale},
          {"ks", r.ks},               {"w1", r.w1}};
}

nlohmann::json to_json(const InteractionReport& r) {
  const double third = std::accumulate(r.abs_delta_third_moments.begin(),
                                       r.abs_delta_third_moments.end(), 0.0);
  return {{"statistic", r.statistic},
          {"n", r.n},
          {"trials", r.trials},
          {"seed", r.seed},
          {"threshold", r.threshold},
          {"extension_threshold", r.extension_threshold},
          {"tested", r.tested},
          {"violations", r.violations},
          {"M", r.max_abs_delta},
          {"delta", r.delta},
          {"delta_single_axis", r.delta_single_axis},
          {"mean_delta", r.mean_delta},
          {"mean_abs_delta", r.mean_abs_delta},
          {"m_moment8", r.m_moment8},
          {"delta_moment4", r.delta_moment4},
          {"sum_abs_delta_third_moments", third}};
}

nlohmann::json to_json(const BivariateReport& r) {
  return {{"n", r.n},
          {"samples", r.samples},
          {"seed", r.seed},
          {"corr", r.corr},
          {"exact_corr", r.exact_corr},
          {"ks_descents", r.ks_descents},
          {"ks_inverse_descents", r.ks_inverse_descents}};
}

nlohmann::json to_json(const CoincidenceReport& r) {
  return {{"n", r.n},
          {"samples", r.samples},
          {"seed", r.seed},
          {"rate", r.rate},
          {"rate_times_sqrt_n", r.rate_times_sqrt_n}};
}

std::string table_csv(const BivariateDescentTable& table) {
  std::ostringstream out;
  out << "r,s,count\n";
  for (int r = 1; r <= table.n(); ++r) {
    for (int s = 1; s <= table.n(); ++s) out << r << ',' << s << ',' << table.at(r, s).get_str() << '\n';
  }
  return out.str();
}

std::string violations_csv(const ViolationReport& report) {
  std::ostringstream out;
  out << "pi,sigma,d_pi_id,d_id_sigma,d_pi_sigma\n";
  for (const auto& t : report.triples) {
    out << t.pi.to_string() << ',' << t.sigma.to_string() << ',' << t.d_pi_id << ','
        << t.d_id_sigma << ',' << t.d_pi_sigma << '\n';
  }
  return out.str();
}

}  // namespace permclt
