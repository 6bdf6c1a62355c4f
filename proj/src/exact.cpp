#include "permclt/exact.hpp"

#include <algorithm>
#include <cstdint>

#include "permclt/error.hpp"
#include "permclt/normal.hpp"
#include "permclt/stats.hpp"

namespace permclt {

mpz_class ExactDistribution::total() const {
  mpz_class t = 0;
  for (const auto& [value, c] : values) t += c;
  return t;
}

mpz_class ExactDistribution::count(long value) const {
  for (const auto& [v, c] : values) {
    if (v == value) return c;
  }
  return 0;
}

std::string_view to_string(TableMethod m) {
  switch (m) {
    case TableMethod::brute:
      return "brute";
    case TableMethod::gf:
      return "gf";
    case TableMethod::recurrence:
      return "recurrence";
  }
  return "unknown";
}

TableMethod table_method_from_string(std::string_view s) {
  if (s == "brute") return TableMethod::brute;
  if (s == "gf") return TableMethod::gf;
  if (s == "recurrence") return TableMethod::recurrence;
  throw InvalidArgument("unknown table method \"" + std::string(s) + "\"");
}

BivariateDescentTable::BivariateDescentTable(int n, TableMethod method)
    : n_(n), method_(method) {
  if (n < 1) throw InvalidArgument("bivariate table: n must be at least 1");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::size_t BivariateDescentTable::index(int r, int s) const {
  if (r < 1 || r > n_ || s < 1 || s > n_) {
    throw InvalidArgument("bivariate table: cell (" + std::to_string(r) + "," +
                          std::to_string(s) + ") out of range");
  }
  return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(s - 1);
}

mpz_class BivariateDescentTable::total() const {
  mpz_class t = 0;
  for (const auto& c : cells_) t += c;
  return t;
}

bool BivariateDescentTable::is_symmetric() const {
  for (int r = 1; r <= n_; ++r) {
    for (int s = r + 1; s <= n_; ++s) {
      if (at(r, s) != at(s, r)) return false;
    }
  }
  return true;
}

std::vector<mpz_class> BivariateDescentTable::row_sums() const {
  std::vector<mpz_class> sums(static_cast<std::size_t>(n_), 0);
  for (int r = 1; r <= n_; ++r) {
    for (int s = 1; s <= n_; ++s) sums[static_cast<std::size_t>(r - 1)] += at(r, s);
  }
  return sums;
}

mpz_class factorial_mpz(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

namespace {

mpz_class binomial(unsigned long top, unsigned long bottom) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), top, bottom);
  return b;
}

mpz_class power(long base, unsigned long exponent) {
  mpz_class p;
  mpz_class b = base;
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), exponent);
  return p;
}

}  // namespace

ExactDistribution eulerian_row(int n, int cap) {
  if (n < 1) throw InvalidArgument("eulerian_row: n must be at least 1");
  if (n > cap) throw CapExceeded("eulerian_row", n, cap);
  // row[i] = A_{m,i+1}; A_{m,k} = k·A_{m−1,k} + (m−k+1)·A_{m−1,k−1}.
  std::vector<mpz_class> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<mpz_class> next(static_cast<std::size_t>(m), 0);
    for (int k = 1; k <= m; ++k) {
      mpz_class& cell = next[static_cast<std::size_t>(k - 1)];
      if (k <= m - 1) cell += k * row[static_cast<std::size_t>(k - 1)];
      if (k >= 2) cell += (m - k + 1) * row[static_cast<std::size_t>(k - 2)];
    }
    row = std::move(next);
  }
  ExactDistribution dist;
  dist.n = n;
  for (int i = 0; i < n; ++i) dist.values.emplace_back(i, row[static_cast<std::size_t>(i)]);
  return dist;
}

bool verify_euler_identity(int n, int K) {
  if (n < 1) throw InvalidArgument("verify_euler_identity: n must be at least 1");
  if (K < n + 2) throw InvalidArgument("verify_euler_identity: K must be at least n+2");
  const ExactDistribution row = eulerian_row(n);
  // [t^k] A_n(t)/(1−t)^{n+1} = Σ_i A_{n,i} C(n + k − i, n).
  for (int k = 0; k <= K; ++k) {
    mpz_class coefficient = 0;
    for (const auto& [d, count] : row.values) {
      const long i = d + 1;
      if (i > k) break;
      coefficient += count * binomial(static_cast<unsigned long>(n + k - i),
                                      static_cast<unsigned long>(n));
    }
    if (coefficient != power(k, static_cast<unsigned long>(n))) return false;
  }
  return true;
}

BivariateDescentTable bivariate_brute(int n, int cap) {
  if (n < 1) throw InvalidArgument("bivariate_brute: n must be at least 1");
  if (n > cap) throw CapExceeded("bivariate_brute", n, cap);
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::uint64_t> counts(size * size, 0);
  std::vector<int> inv(size);
  for (const Permutation& p : enumerate(n, cap)) {
    const auto v = p.values();
    for (std::size_t i = 0; i < size; ++i) inv[static_cast<std::size_t>(v[i] - 1)] = static_cast<int>(i);
    const auto r = static_cast<std::size_t>(descents(v));
    const auto s = static_cast<std::size_t>(descents(inv));
    ++counts[r * size + s];
  }
  BivariateDescentTable table(n, TableMethod::brute);
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      table.at(r, s) = static_cast<unsigned long>(
          counts[static_cast<std::size_t>(r - 1) * size + static_cast<std::size_t>(s - 1)]);
    }
  }
  return table;
}

namespace {

/// Dense polynomial in u, v with exponents 0..degree in each variable.
class BivariatePolynomial {
 public:
  explicit BivariatePolynomial(int degree)
      : degree_(degree),
        c_(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1), 0) {}

  int degree() const { return degree_; }

  mpz_class& at(int i, int j) { return c_[idx(i, j)]; }
  const mpz_class& at(int i, int j) const { return c_[idx(i, j)]; }

  BivariatePolynomial d_du() const {
    BivariatePolynomial out(degree_);
    for (int i = 1; i <= degree_; ++i) {
      for (int j = 0; j <= degree_; ++j) out.at(i - 1, j) = i * at(i, j);
    }
    return out;
  }

  BivariatePolynomial d_dv() const {
    BivariatePolynomial out(degree_);
    for (int i = 0; i <= degree_; ++i) {
      for (int j = 1; j <= degree_; ++j) out.at(i, j - 1) = j * at(i, j);
    }
    return out;
  }

  /// this · factor added into `out`; `out` must be large enough.
  void multiply_into(const BivariatePolynomial& factor, BivariatePolynomial& out) const {
    for (int a = 0; a <= factor.degree_; ++a) {
      for (int b = 0; b <= factor.degree_; ++b) {
        const mpz_class& f = factor.at(a, b);
        if (f == 0) continue;
        for (int i = 0; i <= degree_; ++i) {
          for (int j = 0; j <= degree_; ++j) {
            const mpz_class& x = at(i, j);
            if (x != 0) out.at(i + a, j + b) += f * x;
          }
        }
      }
    }
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(degree_ + 1) +
           static_cast<std::size_t>(j);
  }

  int degree_;
  std::vector<mpz_class> c_;
};

BivariatePolynomial small_poly(std::initializer_list<std::tuple<int, int, long>> terms) {
  BivariatePolynomial p(2);
  for (const auto& [i, j, c] : terms) p.at(i, j) += c;
  return p;
}

}  // namespace

BivariateDescentTable bivariate_gf(int n, int cap) {
  if (n < 1) throw InvalidArgument("bivariate_gf: n must be at least 1");
  if (n > cap) throw CapExceeded("bivariate_gf", n, cap);
  const auto size = static_cast<std::size_t>(n + 1);
  // series[k][l] = C(kl + n − 1, n), k, l = 0..n; higher terms cannot reach
  // degree ≤ n after multiplying by polynomials in (1−u), (1−v).
  std::vector<mpz_class> series(size * size);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t l = 0; l < size; ++l) {
      const std::size_t top = k * l + static_cast<std::size_t>(n) - 1;
      series[k * size + l] = binomial(top, static_cast<unsigned long>(n));
    }
  }
  std::vector<mpz_class> signed_binomial(size);
  for (std::size_t m = 0; m < size; ++m) {
    signed_binomial[m] = binomial(static_cast<unsigned long>(n + 1), m);
    if (m % 2 == 1) signed_binomial[m] = -signed_binomial[m];
  }
  // Multiply by (1−u)^{n+1}, then by (1−v)^{n+1}, truncating at degree n.
  std::vector<mpz_class> after_u(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      const mpz_class& w = signed_binomial[i - k];
      for (std::size_t l = 0; l < size; ++l) after_u[i * size + l] += w * series[k * size + l];
    }
  }
  BivariateDescentTable table(n, TableMethod::gf);
  for (std::size_t i = 1; i < size; ++i) {
    for (std::size_t j = 1; j < size; ++j) {
      mpz_class cell = 0;
      for (std::size_t l = 0; l <= j; ++l) cell += signed_binomial[j - l] * after_u[i * size + l];
      table.at(static_cast<int>(i), static_cast<int>(j)) = cell;
    }
  }
  return table;
}

BivariateDescentTable bivariate_recurrence(int n, int cap) {
  if (n < 1) throw InvalidArgument("bivariate_recurrence: n must be at least 1");
  if (n > cap) throw CapExceeded("bivariate_recurrence", n, cap);
  BivariatePolynomial a(1);
  a.at(1, 1) = 1;  // A_1(u, v) = uv
  // m·A_m = (m²uv + (m−1)(1−u)(1−v))·A + m·uv(1−u)·A_u + m·uv(1−v)·A_v
  //         + uv(1−u)(1−v)·A_uv, with A = A_{m−1}.
  for (int m = 2; m <= n; ++m) {
    const long mm = m;
    const BivariatePolynomial base =
        small_poly({{0, 0, mm - 1}, {1, 0, -(mm - 1)}, {0, 1, -(mm - 1)},
                    {1, 1, mm * mm + mm - 1}});
    const BivariatePolynomial along_u = small_poly({{1, 1, mm}, {2, 1, -mm}});
    const BivariatePolynomial along_v = small_poly({{1, 1, mm}, {1, 2, -mm}});
    const BivariatePolynomial mixed = small_poly({{1, 1, 1}, {2, 1, -1}, {1, 2, -1}, {2, 2, 1}});

    BivariatePolynomial next(m + 1);
    a.multiply_into(base, next);
    const BivariatePolynomial du = a.d_du();
    du.multiply_into(along_u, next);
    a.d_dv().multiply_into(along_v, next);
    du.d_dv().multiply_into(mixed, next);

    BivariatePolynomial reduced(m);
    for (int i = 0; i <= m + 1; ++i) {
      for (int j = 0; j <= m + 1; ++j) {
        const mpz_class& c = next.at(i, j);
        if (c == 0) continue;
        if (i > m || j > m || !mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(m))) {
          throw std::logic_error("bivariate_recurrence: inexact step at n=" + std::to_string(m));
        }
        mpz_divexact_ui(reduced.at(i, j).get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
      }
    }
    a = std::move(reduced);
  }
  BivariateDescentTable table(n, TableMethod::recurrence);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) {
        if (a.at(i, j) != 0) {
          throw std::logic_error("bivariate_recurrence: nonzero coefficient at zero degree");
        }
        continue;
      }
      table.at(i, j) = a.at(i, j);
    }
  }
  return table;
}

BivariateDescentTable bivariate_table(int n, TableMethod method) {
  switch (method) {
    case TableMethod::brute:
      return bivariate_brute(n);
    case TableMethod::gf:
      return bivariate_gf(n);
    case TableMethod::recurrence:
      return bivariate_recurrence(n);
  }
  throw InvalidArgument("unknown table method");
}

ExactDistribution t_distribution(const BivariateDescentTable& table) {
  const int n = table.n();
  ExactDistribution dist;
  dist.n = n;
  for (long t = 0; t <= 2L * (n - 1); ++t) dist.values.emplace_back(t, 0);
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      dist.values[static_cast<std::size_t>(r + s - 2)].second += table.at(r, s);
    }
  }
  return dist;
}

ExactDistribution descent_distribution(const BivariateDescentTable& table) {
  ExactDistribution dist;
  dist.n = table.n();
  const auto sums = table.row_sums();
  for (std::size_t i = 0; i < sums.size(); ++i) dist.values.emplace_back(static_cast<long>(i), sums[i]);
  return dist;
}

ExactDistribution brute_distribution(int n, const std::function<long(const Permutation&)>& stat,
                                     int cap) {
  std::vector<std::pair<long, std::uint64_t>> tally;
  for (const Permutation& p : enumerate(n, cap)) {
    const long value = stat(p);
    auto it = std::lower_bound(tally.begin(), tally.end(), value,
                               [](const auto& entry, long v) { return entry.first < v; });
    if (it == tally.end() || it->first != value) it = tally.insert(it, {value, 0});
    ++it->second;
  }
  ExactDistribution dist;
  dist.n = n;
  for (const auto& [value, c] : tally) dist.values.emplace_back(value, static_cast<unsigned long>(c));
  return dist;
}

ExactMoments moments(const ExactDistribution& dist) {
  const mpz_class total = dist.total();
  if (dist.values.empty() || total == 0) throw InvalidArgument("moments: empty distribution");
  mpz_class first = 0;
  mpz_class second = 0;
  for (const auto& [value, c] : dist.values) {
    first += c * value;
    second += c * value * value;
  }
  ExactMoments m;
  m.mean = mpq_class(first, total);
  m.mean.canonicalize();
  mpq_class raw_second(second, total);
  raw_second.canonicalize();
  m.variance = raw_second - m.mean * m.mean;
  return m;
}

ExactMoments joint_moments(const BivariateDescentTable& table) {
  ExactMoments m = moments(descent_distribution(table));
  mpz_class mixed = 0;
  for (int r = 1; r <= table.n(); ++r) {
    for (int s = 1; s <= table.n(); ++s) mixed += table.at(r, s) * (r - 1) * (s - 1);
  }
  mpq_class product_mean(mixed, table.total());
  product_mean.canonicalize();
  m.covariance = product_mean - m.mean * m.mean;
  return m;
}

mpq_class descent_product_mean_exact(int n, int cap) {
  if (n < 1) throw InvalidArgument("descent_product_mean_exact: n must be at least 1");
  if (n > cap) throw CapExceeded("descent_product_mean_exact", n, cap);
  std::uint64_t sum = 0;
  std::uint64_t count = 0;
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (const Permutation& p : enumerate(n, cap)) {
    const auto v = p.values();
    for (std::size_t i = 0; i < v.size(); ++i) inv[static_cast<std::size_t>(v[i] - 1)] = static_cast<int>(i);
    sum += static_cast<std::uint64_t>(descents(v)) * static_cast<std::uint64_t>(descents(inv));
    ++count;
  }
  mpq_class mean(mpz_class(static_cast<unsigned long>(sum)),
                 mpz_class(static_cast<unsigned long>(count)));
  mean.canonicalize();
  return mean;
}

mpq_class descent_covariance_exact(int n, int cap) {
  const mpq_class product = descent_product_mean_exact(n, cap);
  const mpq_class mean = moments(brute_distribution(n, [](const Permutation& p) {
                           return static_cast<long>(descents(p));
                         }, cap)).mean;
  return product - mean * mean;
}

mpq_class descent_correlation_exact(const BivariateDescentTable& table) {
  const ExactMoments m = joint_moments(table);
  if (m.variance == 0) throw InvalidArgument("descent_correlation_exact: zero variance (n = 1)");
  return *m.covariance / m.variance;
}

mpq_class irwin_hall_cell(int n, int j) {
  if (n < 1) throw InvalidArgument("irwin_hall_cell: n must be at least 1");
  if (j < 0 || j > n - 1) throw InvalidArgument("irwin_hall_cell: j must be in 0..n-1");
  // n!·P(j < S < j+1) = Σ_m (−1)^m C(n,m) [(j+1−m)₊ⁿ − (j−m)₊ⁿ].
  mpz_class volume = 0;
  const auto un = static_cast<unsigned long>(n);
  for (int m = 0; m <= std::min(n, j + 1); ++m) {
    mpz_class term = power(j + 1 - m, un);
    if (j - m > 0) term -= power(j - m, un);
    term *= binomial(un, static_cast<unsigned long>(m));
    if (m % 2 == 1) {
      volume -= term;
    } else {
      volume += term;
    }
  }
  mpq_class p(volume, factorial_mpz(n));
  p.canonicalize();
  return p;
}

bool carlitz_predicts_zero(int n, int r, int s, CarlitzForm form) {
  // r compared with (s−1)n/s + 1 in integers: r·s vs (s−1)n + s.
  const long rs = static_cast<long>(r) * s;
  const long bound_r = static_cast<long>(s - 1) * n + s;
  if (form == CarlitzForm::displayed) return rs >= bound_r;
  const long sr = static_cast<long>(s) * r;
  const long bound_s = static_cast<long>(r - 1) * n + r;
  return rs > bound_r || sr > bound_s;
}

std::vector<CarlitzCell> carlitz_mismatches(const BivariateDescentTable& table, CarlitzForm form) {
  std::vector<CarlitzCell> bad;
  for (int r = 1; r <= table.n(); ++r) {
    for (int s = 1; s <= table.n(); ++s) {
      const bool zero = table.at(r, s) == 0;
      if (zero != carlitz_predicts_zero(table.n(), r, s, form)) {
        bad.push_back({r, s, table.at(r, s)});
      }
    }
  }
  return bad;
}

bool carlitz_support_check(const BivariateDescentTable& table, CarlitzForm form) {
  return carlitz_mismatches(table, form).empty();
}

double kolmogorov_to_normal(const ExactDistribution& dist, const mpq_class& mean, double sd) {
  if (!(sd > 0.0)) throw InvalidArgument("kolmogorov_to_normal: sd must be positive");
  const mpz_class total = dist.total();
  if (total == 0) throw InvalidArgument("kolmogorov_to_normal: empty distribution");
  const double mu = mean.get_d();
  mpz_class cumulative = 0;
  double sup = 0.0;
  for (const auto& [value, c] : dist.values) {
    if (c == 0) continue;
    const double z = (static_cast<double>(value) - mu) / sd;
    const double phi = normal_cdf(z);
    const double before = mpq_class(cumulative, total).get_d();
    cumulative += c;
    const double after = mpq_class(cumulative, total).get_d();
    sup = std::max({sup, std::abs(after - phi), std::abs(before - phi)});
  }
  return sup;
}

mpq_class descent_mean_formula(int n) {
  mpq_class q(n - 1, 2);
  q.canonicalize();
  return q;
}

mpq_class descent_variance_formula(int n) {
  mpq_class q(n + 1, 12);
  q.canonicalize();
  return q;
}

mpq_class t_mean_formula(int n) { return mpq_class(n - 1); }

mpq_class t_variance_formula(int n) {
  mpq_class a(n + 7, 6);
  a.canonicalize();
  mpq_class b(1, n);
  b.canonicalize();
  return a - b;
}

mpq_class descent_covariance_formula(int n) {
  mpq_class q(n - 1, 2 * n);
  q.canonicalize();
  return q;
}

}  // namespace permclt
