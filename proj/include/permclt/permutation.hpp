#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permclt/rng.hpp"

namespace permclt {

/// Default largest n for which full enumeration of S_n is allowed (10! ≈ 3.6M).
inline constexpr int kDefaultEnumerationCap = 10;

/// A bijection of {1,…,n} in one-line notation.
///
/// Values are 1-based as in every external format. Storage is indexed from
/// zero: `values()[i]` is π(i+1). `operator()` takes a 1-based position.
class Permutation {
 public:
  /// Validates that `one_line` is a permutation of 1..n with n ≥ 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Parses space separated integers, e.g. "2 4 1 3".
  static Permutation parse(std::string_view text);

  /// Skips validation. The caller guarantees a bijection of 1..n.
  static Permutation from_trusted(std::vector<int> one_line) {
    return Permutation(std::move(one_line), Trusted{});
  }

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// π(i) for 1-based i.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return entries_; }

  Permutation inverse() const;

  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> one_line, Trusted) : entries_(std::move(one_line)) {}

  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// r(i) = p(q(i)). Sizes must agree.
Permutation compose(const Permutation& p, const Permutation& q);

/// Position reversal: (p(n), …, p(1)).
Permutation reversal(const Permutation& p);

/// Uniform element of S_n by Fisher–Yates.
Permutation sample_uniform(int n, SeededRng& rng);

/// Lexicographic enumeration of S_n as an input range.
///
///   for (const Permutation& p : enumerate(4)) { ... }
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class PermutationRange;
    explicit iterator(int n);

    Permutation current_ = Permutation::identity(1);
    std::vector<int> work_;
    bool done_ = true;
  };

  explicit PermutationRange(int n) : n_(n) {}

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

/// All n! permutations in lexicographic order. Throws CapExceeded when n > cap.
PermutationRange enumerate(int n, int cap = kDefaultEnumerationCap);

/// A point of the unit square.
struct Point {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// n points in [0,1]², n ≥ 1.
class PointConfiguration {
 public:
  explicit PointConfiguration(std::vector<Point> points);

  /// n i.i.d. uniform points, u drawn before v for each point.
  static PointConfiguration sample(int n, SeededRng& rng);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }

  /// Copy with point `index` (0-based) replaced.
  PointConfiguration with_replaced(std::size_t index, Point p) const;

 private:
  std::vector<Point> points_;
};

/// 0-based x- and y-ranks of every point. Ties in a coordinate are broken by
/// point index.
struct PointRanks {
  std::vector<int> x_rank;
  std::vector<int> y_rank;
  std::vector<int> x_order;  ///< x_order[r] = index of the point with x-rank r
};

PointRanks rank_points(std::span<const Point> points);

/// π(i) = y-rank of the point with x-rank i; σ(i) = x-rank of the point with
/// y-rank i. σ = π⁻¹ always. Rejects configurations containing two identical
/// points.
std::pair<Permutation, Permutation> from_points(const PointConfiguration& cfg);

}  // namespace permclt
