#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permclt/permutation.hpp"

namespace permclt {

/// Number of i in 1..n-1 with p(i+1) < p(i).
int descents(const Permutation& p);
int descents(std::span<const int> one_line);

/// Indicators X_1..X_{n-1}; X_i = 1 iff p(i+1) < p(i). Empty for n = 1.
std::vector<std::uint8_t> descent_vector(const Permutation& p);

/// D(p) + D(p⁻¹).
int t_statistic(const Permutation& p);

/// Interior peaks: middles of 3-windows that exceed both neighbours.
int peaks(const Permutation& p);
int peaks(std::span<const int> one_line);

/// Relative order of distinct values, as a permutation of 1..k.
Permutation pattern_of(std::span<const int> window);

/// Lexicographic index in [0, k!) of the pattern of `window`.
std::size_t pattern_index(std::span<const int> window);

struct AuxStatistics {
  std::int64_t inversions = 0;
  int cycle_count = 0;
  int lis_length = 0;

  friend bool operator==(const AuxStatistics&, const AuxStatistics&) = default;
};

AuxStatistics aux_statistics(const Permutation& p);

std::int64_t inversions(const Permutation& p);
int cycle_count(const Permutation& p);
/// Longest increasing subsequence by patience sorting, O(n log n).
int lis_length(const Permutation& p);

/// Largest window degree accepted by LocalStatistic (8! = 40320 patterns).
inline constexpr int kMaxLocalDegree = 8;

/// A statistic F(π) = Σ_i f_i(pattern of π(i+1..i+k)), i = 0..n−k.
///
/// Each component is a table over the k! patterns indexed by lexicographic
/// pattern rank, with every value in [−1, 1]. Either one table is shared by
/// all windows (uniform) or one table per window is supplied; in the latter
/// case the statistic is only defined for n = components + k − 1. Component
/// 0 covers positions 1..k.
class LocalStatistic {
 public:
  using Table = std::vector<double>;

  static LocalStatistic uniform(int degree, Table table);
  static LocalStatistic per_window(int degree, std::vector<Table> tables);

  /// f(pattern) = 1 iff pattern = (2 1).
  static LocalStatistic descents();
  /// f(pattern) = 1 iff the middle of a 3-window is its maximum.
  static LocalStatistic peaks();

  /// Loads the JSON format documented in the README.
  static LocalStatistic from_json(const std::string& text);
  std::string to_json() const;

  int degree() const noexcept { return degree_; }
  bool is_uniform() const noexcept { return tables_.size() == 1 && uniform_; }
  /// True when every table entry is an integer.
  bool integer_valued() const noexcept { return integer_valued_; }

  /// Number of components for permutations of size n; checks compatibility.
  std::size_t component_count(int n) const;

  /// Table for window i (0-based).
  const Table& component(std::size_t i) const {
    return uniform_ ? tables_.front() : tables_.at(i);
  }

 private:
  LocalStatistic(int degree, std::vector<Table> tables, bool uniform);

  int degree_;
  std::vector<Table> tables_;
  bool uniform_;
  bool integer_valued_;
};

/// F(p). Integer-valued statistics are accumulated in exact integer
/// arithmetic; real-valued ones in double.
double eval_local(const LocalStatistic& f, const Permutation& p);
double eval_local(const LocalStatistic& f, std::span<const int> one_line);

std::size_t factorial(int k);

}  // namespace permclt
