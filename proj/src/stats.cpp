#include "permclt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "permclt/error.hpp"

namespace permclt {

int descents(std::span<const int> one_line) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < one_line.size(); ++i) d += one_line[i + 1] < one_line[i];
  return d;
}

int descents(const Permutation& p) { return descents(p.values()); }

std::vector<std::uint8_t> descent_vector(const Permutation& p) {
  const auto v = p.values();
  std::vector<std::uint8_t> x;
  if (v.size() < 2) return x;
  x.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) x.push_back(v[i + 1] < v[i] ? 1 : 0);
  return x;
}

int t_statistic(const Permutation& p) { return descents(p) + descents(p.inverse()); }

int peaks(std::span<const int> one_line) {
  int count = 0;
  for (std::size_t i = 1; i + 1 < one_line.size(); ++i) {
    count += one_line[i] > one_line[i - 1] && one_line[i] > one_line[i + 1];
  }
  return count;
}

int peaks(const Permutation& p) { return peaks(p.values()); }

Permutation pattern_of(std::span<const int> window) {
  const std::size_t k = window.size();
  std::vector<int> ranks(k);
  for (std::size_t j = 0; j < k; ++j) {
    int r = 1;
    for (std::size_t m = 0; m < k; ++m) {
      if (m != j && window[m] == window[j]) {
        throw InvalidArgument("pattern_of: window values must be distinct");
      }
      r += window[m] < window[j];
    }
    ranks[j] = r;
  }
  return Permutation::from_trusted(std::move(ranks));
}

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t pattern_index(std::span<const int> window) {
  const std::size_t k = window.size();
  std::size_t index = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t smaller_after = 0;
    for (std::size_t m = j + 1; m < k; ++m) smaller_after += window[m] < window[j];
    index = index * (k - j) + smaller_after;
  }
  return index;
}

std::int64_t inversions(const Permutation& p) {
  // Fenwick tree over values, scanning right to left.
  const auto v = p.values();
  const std::size_t n = v.size();
  std::vector<int> tree(n + 1, 0);
  std::int64_t inv = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (auto x = static_cast<std::size_t>(v[i]) - 1; x > 0; x -= x & (~x + 1)) inv += tree[x];
    for (auto x = static_cast<std::size_t>(v[i]); x <= n; x += x & (~x + 1)) ++tree[x];
  }
  return inv;
}

int cycle_count(const Permutation& p) {
  const auto v = p.values();
  std::vector<char> visited(v.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(v[j] - 1)) visited[j] = 1;
  }
  return cycles;
}

int lis_length(const Permutation& p) {
  std::vector<int> tails;
  for (int x : p.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

AuxStatistics aux_statistics(const Permutation& p) {
  return {inversions(p), cycle_count(p), lis_length(p)};
}

LocalStatistic::LocalStatistic(int degree, std::vector<Table> tables, bool uniform)
    : degree_(degree), tables_(std::move(tables)), uniform_(uniform), integer_valued_(true) {
  if (degree_ < 2 || degree_ > kMaxLocalDegree) {
    throw InvalidArgument("local statistic degree must be in 2.." +
                          std::to_string(kMaxLocalDegree));
  }
  if (tables_.empty()) throw InvalidArgument("local statistic needs at least one component");
  const std::size_t patterns = factorial(degree_);
  for (const Table& t : tables_) {
    if (t.size() != patterns) {
      throw InvalidArgument("component table must have k! = " + std::to_string(patterns) +
                            " entries");
    }
    for (double value : t) {
      if (!(std::abs(value) <= 1.0)) {
        throw InvalidArgument("component values must lie in [-1, 1]");
      }
      if (value != std::floor(value)) integer_valued_ = false;
    }
  }
}

LocalStatistic LocalStatistic::uniform(int degree, Table table) {
  std::vector<Table> tables;
  tables.push_back(std::move(table));
  return LocalStatistic(degree, std::move(tables), true);
}

LocalStatistic LocalStatistic::per_window(int degree, std::vector<Table> tables) {
  return LocalStatistic(degree, std::move(tables), false);
}

LocalStatistic LocalStatistic::descents() {
  // Patterns of length 2 in lexicographic order: (1 2), (2 1).
  return uniform(2, {0.0, 1.0});
}

LocalStatistic LocalStatistic::peaks() {
  Table t(6, 0.0);
  const int up_down_a[] = {1, 3, 2};
  const int up_down_b[] = {2, 3, 1};
  t[pattern_index(up_down_a)] = 1.0;
  t[pattern_index(up_down_b)] = 1.0;
  return uniform(3, std::move(t));
}

std::size_t LocalStatistic::component_count(int n) const {
  if (n < 1) throw InvalidArgument("local statistic needs n >= 1");
  const auto count = static_cast<std::size_t>(std::max(0, n - degree_ + 1));
  if (!uniform_ && tables_.size() != count) {
    throw InvalidArgument("local statistic has " + std::to_string(tables_.size()) +
                          " components but n=" + std::to_string(n) + " needs " +
                          std::to_string(count));
  }
  return count;
}

double eval_local(const LocalStatistic& f, std::span<const int> one_line) {
  const std::size_t windows = f.component_count(static_cast<int>(one_line.size()));
  const auto k = static_cast<std::size_t>(f.degree());
  if (f.integer_valued()) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < windows; ++i) {
      sum += static_cast<std::int64_t>(f.component(i)[pattern_index(one_line.subspan(i, k))]);
    }
    return static_cast<double>(sum);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < windows; ++i) {
    sum += f.component(i)[pattern_index(one_line.subspan(i, k))];
  }
  return sum;
}

double eval_local(const LocalStatistic& f, const Permutation& p) {
  return eval_local(f, p.values());
}

namespace {

LocalStatistic::Table table_from_json(const nlohmann::json& obj, int degree) {
  if (!obj.is_object()) throw InvalidArgument("component table must be a JSON object");
  LocalStatistic::Table table(factorial(degree), 0.0);
  for (const auto& [key, value] : obj.items()) {
    const Permutation pattern = Permutation::parse(key);
    if (pattern.size() != degree) {
      throw InvalidArgument("pattern \"" + key + "\" does not have length " +
                            std::to_string(degree));
    }
    if (!value.is_number()) throw InvalidArgument("pattern values must be numbers");
    table[pattern_index(pattern.values())] = value.get<double>();
  }
  return table;
}

nlohmann::json table_to_json(const LocalStatistic::Table& table, int degree) {
  nlohmann::json obj = nlohmann::json::object();
  for (const Permutation& pattern : enumerate(degree, kMaxLocalDegree)) {
    const double value = table[pattern_index(pattern.values())];
    if (value != 0.0) obj[pattern.to_string()] = value;
  }
  return obj;
}

}  // namespace

LocalStatistic LocalStatistic::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("local statistic JSON: ") + e.what());
  }
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) {
    throw InvalidArgument("local statistic JSON needs an integer \"degree\"");
  }
  const int degree = doc["degree"].get<int>();
  if (degree < 2 || degree > kMaxLocalDegree) {
    throw InvalidArgument("local statistic degree must be in 2.." +
                          std::to_string(kMaxLocalDegree));
  }
  const bool has_uniform = doc.contains("uniform_component");
  const bool has_components = doc.contains("components");
  if (has_uniform == has_components) {
    throw InvalidArgument(
        "local statistic JSON needs exactly one of \"uniform_component\" or \"components\"");
  }
  if (has_uniform) return uniform(degree, table_from_json(doc["uniform_component"], degree));
  if (!doc["components"].is_array()) throw InvalidArgument("\"components\" must be an array");
  std::vector<Table> tables;
  for (const auto& c : doc["components"]) tables.push_back(table_from_json(c, degree));
  return per_window(degree, std::move(tables));
}

std::string LocalStatistic::to_json() const {
  nlohmann::json doc;
  doc["degree"] = degree_;
  if (uniform_) {
    doc["uniform_component"] = table_to_json(tables_.front(), degree_);
  } else {
    doc["components"] = nlohmann::json::array();
    for (const Table& t : tables_) doc["components"].push_back(table_to_json(t, degree_));
  }
  return doc.dump(2);
}

}  // namespace permclt
