#include "permclt/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include "permclt/error.hpp"

namespace permclt {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const auto n = entries_.size();
  if (n == 0) throw InvalidArgument("permutation must have at least one entry");
  std::vector<char> seen(n, 0);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InvalidArgument("permutation entry " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]++) {
      throw InvalidArgument("permutation entry " + std::to_string(v) + " repeated");
    }
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("identity: size must be at least 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return from_trusted(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> e;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == ',' || text[pos] == '\n')) {
      ++pos;
    }
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw InvalidArgument("cannot parse permutation \"" + std::string(text) + "\"");
    }
    e.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return from_trusted(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << '(' << p.to_string() << ')';
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("compose: size mismatch " + std::to_string(p.size()) +
                          " vs " + std::to_string(q.size()));
  }
  const auto pv = p.values();
  std::vector<int> r;
  r.reserve(pv.size());
  for (int qi : q.values()) r.push_back(pv[static_cast<std::size_t>(qi - 1)]);
  return Permutation::from_trusted(std::move(r));
}

Permutation reversal(const Permutation& p) {
  std::vector<int> r(p.values().rbegin(), p.values().rend());
  return Permutation::from_trusted(std::move(r));
}

Permutation sample_uniform(int n, SeededRng& rng) {
  if (n < 1) throw InvalidArgument("sample_uniform: size must be at least 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  for (std::size_t i = e.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(e[i], e[j]);
  }
  return Permutation::from_trusted(std::move(e));
}

PermutationRange::iterator::iterator(int n)
    : current_(Permutation::identity(n)),
      work_(current_.values().begin(), current_.values().end()),
      done_(false) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (std::next_permutation(work_.begin(), work_.end())) {
    current_ = Permutation::from_trusted(work_);
  } else {
    done_ = true;
  }
  return *this;
}

PermutationRange enumerate(int n, int cap) {
  if (n < 1) throw InvalidArgument("enumerate: size must be at least 1");
  if (n > cap) throw CapExceeded("enumerate", n, cap);
  return PermutationRange(n);
}

PointConfiguration::PointConfiguration(std::vector<Point> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("point configuration must be nonempty");
  for (const Point& p : points_) {
    if (!(p.u >= 0.0 && p.u <= 1.0 && p.v >= 0.0 && p.v <= 1.0)) {
      throw InvalidArgument("point coordinates must lie in [0,1]");
    }
  }
}

PointConfiguration PointConfiguration::sample(int n, SeededRng& rng) {
  if (n < 1) throw InvalidArgument("sample: size must be at least 1");
  std::vector<Point> pts(static_cast<std::size_t>(n));
  for (Point& p : pts) {
    p.u = rng.uniform();
    p.v = rng.uniform();
  }
  return PointConfiguration(std::move(pts));
}

PointConfiguration PointConfiguration::with_replaced(std::size_t index, Point p) const {
  if (index >= points_.size()) throw InvalidArgument("with_replaced: index out of range");
  auto pts = points_;
  pts[index] = p;
  return PointConfiguration(std::move(pts));
}

namespace {

// Order of indices by (key, index). Keys in [0,1] are bucketed so uniform
// inputs sort in expected linear time; other keys fall back to a full sort.
std::vector<int> order_by(std::span<const Point> points, double Point::*key) {
  const std::size_t n = points.size();
  std::vector<int> order(n);
  auto less = [&](int a, int b) {
    const double ka = points[static_cast<std::size_t>(a)].*key;
    const double kb = points[static_cast<std::size_t>(b)].*key;
    return ka < kb || (ka == kb && a < b);
  };
  bool in_unit = true;
  for (const Point& p : points) {
    const double k = p.*key;
    if (!(k >= 0.0 && k <= 1.0)) {
      in_unit = false;
      break;
    }
  }
  if (!in_unit || n < 64) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), less);
    return order;
  }
  auto bucket_of = [n](double k) {
    return std::min(n - 1, static_cast<std::size_t>(k * static_cast<double>(n)));
  };
  std::vector<std::size_t> start(n + 1, 0);
  for (const Point& p : points) ++start[bucket_of(p.*key) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    order[fill[bucket_of(points[i].*key)]++] = static_cast<int>(i);
  }
  for (std::size_t b = 0; b < n; ++b) {
    const auto first = order.begin() + static_cast<std::ptrdiff_t>(start[b]);
    const auto last = order.begin() + static_cast<std::ptrdiff_t>(start[b + 1]);
    if (last - first > 1) std::sort(first, last, less);
  }
  return order;
}

}  // namespace

PointRanks rank_points(std::span<const Point> points) {
  const std::size_t n = points.size();
  PointRanks r;
  r.x_order = order_by(points, &Point::u);
  const auto y_order = order_by(points, &Point::v);
  r.x_rank.resize(n);
  r.y_rank.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    r.x_rank[static_cast<std::size_t>(r.x_order[k])] = static_cast<int>(k);
    r.y_rank[static_cast<std::size_t>(y_order[k])] = static_cast<int>(k);
  }
  return r;
}

std::pair<Permutation, Permutation> from_points(const PointConfiguration& cfg) {
  const auto pts = cfg.points();
  const PointRanks ranks = rank_points(pts);
  const std::size_t n = pts.size();

  // Identical points share u, so they sit in one run of equal u in x-order.
  for (std::size_t a = 0; a < n;) {
    std::size_t b = a + 1;
    const double u = pts[static_cast<std::size_t>(ranks.x_order[a])].u;
    while (b < n && pts[static_cast<std::size_t>(ranks.x_order[b])].u == u) ++b;
    for (std::size_t i = a; i < b; ++i) {
      for (std::size_t j = i + 1; j < b; ++j) {
        if (pts[static_cast<std::size_t>(ranks.x_order[i])].v ==
            pts[static_cast<std::size_t>(ranks.x_order[j])].v) {
          throw InvalidArgument("from_points: duplicate points cannot be ranked");
        }
      }
    }
    a = b;
  }

  std::vector<int> pi(n);
  std::vector<int> sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int y = ranks.y_rank[static_cast<std::size_t>(ranks.x_order[i])];
    pi[i] = y + 1;
    sigma[static_cast<std::size_t>(y)] = static_cast<int>(i) + 1;
  }
  return {Permutation::from_trusted(std::move(pi)),
          Permutation::from_trusted(std::move(sigma))};
}

}  // namespace permclt
