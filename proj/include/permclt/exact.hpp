#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permclt/permutation.hpp"

namespace permclt {

inline constexpr int kEulerianCap = 500;
inline constexpr int kGfCap = 60;
inline constexpr int kRecurrenceCap = 60;

/// Exact law of an integer statistic under the uniform measure on S_n.
struct ExactDistribution {
  int n = 0;
  /// (value, count) pairs in increasing value order; zero counts allowed.
  std::vector<std::pair<long, mpz_class>> values;

  mpz_class total() const;
  /// Count for `value`, zero when absent.
  mpz_class count(long value) const;
};

/// Exact rational moments of a uniform law.
struct ExactMoments {
  mpq_class mean;
  mpq_class variance;
  std::optional<mpq_class> covariance;
};

enum class TableMethod { brute, gf, recurrence };

std::string_view to_string(TableMethod m);
TableMethod table_method_from_string(std::string_view s);

/// A_{n,r,s} = #{π ∈ S_n : D(π) = r−1, D(π⁻¹) = s−1}, with r, s in 1..n.
class BivariateDescentTable {
 public:
  BivariateDescentTable(int n, TableMethod method);

  int n() const noexcept { return n_; }
  TableMethod method() const noexcept { return method_; }

  const mpz_class& at(int r, int s) const { return cells_[index(r, s)]; }
  mpz_class& at(int r, int s) { return cells_[index(r, s)]; }

  mpz_class total() const;
  bool is_symmetric() const;
  /// Marginal law of D(π) as Eulerian counts indexed by r.
  std::vector<mpz_class> row_sums() const;

  /// Cell-wise equality, ignoring the method tag.
  bool same_cells(const BivariateDescentTable& other) const {
    return n_ == other.n_ && cells_ == other.cells_;
  }

 private:
  std::size_t index(int r, int s) const;

  int n_;
  TableMethod method_;
  std::vector<mpz_class> cells_;
};

/// Eulerian numbers A_{n,1..n} as the law of D (value i−1 has count A_{n,i}).
ExactDistribution eulerian_row(int n, int cap = kEulerianCap);

/// Checks the first K+1 coefficients of A_n(t)·(1−t)^{−(n+1)} against k^n.
bool verify_euler_identity(int n, int K);

BivariateDescentTable bivariate_brute(int n, int cap = kDefaultEnumerationCap);
BivariateDescentTable bivariate_gf(int n, int cap = kGfCap);
BivariateDescentTable bivariate_recurrence(int n, int cap = kRecurrenceCap);
BivariateDescentTable bivariate_table(int n, TableMethod method);

/// Law of T = D(π) + D(π⁻¹) read off the table.
ExactDistribution t_distribution(const BivariateDescentTable& table);

/// Law of D(π) read off the table.
ExactDistribution descent_distribution(const BivariateDescentTable& table);

/// Exact law of an integer statistic by full enumeration of S_n.
ExactDistribution brute_distribution(int n, const std::function<long(const Permutation&)>& stat,
                                     int cap = kDefaultEnumerationCap);

ExactMoments moments(const ExactDistribution& dist);

/// Mean and variance of D plus Cov(D(π), D(π⁻¹)), from a table.
ExactMoments joint_moments(const BivariateDescentTable& table);

/// E(D(π)·D(π⁻¹)) by enumeration.
mpq_class descent_product_mean_exact(int n, int cap = kDefaultEnumerationCap);
/// E(D(π)·D(π⁻¹)) − E(D(π))² by enumeration.
mpq_class descent_covariance_exact(int n, int cap = kDefaultEnumerationCap);

/// Corr(D(π), D(π⁻¹)) = Cov / Var(D), exact because both marginals agree.
mpq_class descent_correlation_exact(const BivariateDescentTable& table);

/// P(j < U_1+…+U_n < j+1) for i.i.d. uniforms, by the alternating volume sum.
mpq_class irwin_hall_cell(int n, int j);

/// Two readings of the support rule for A_{n,r,s}.
///
/// `displayed`: A_{n,r,s} = 0 ⟺ r ≥ (s−1)n/s + 1, checked literally.
/// `sharp`: A_{n,r,s} = 0 ⟺ r > (s−1)n/s + 1 or s > (r−1)n/r + 1. This is
/// the form that matches enumeration; see README.
enum class CarlitzForm { displayed, sharp };

/// Predicted zero for cell (r, s) under `form`.
bool carlitz_predicts_zero(int n, int r, int s, CarlitzForm form);

struct CarlitzCell {
  int r;
  int s;
  mpz_class count;
};

/// Cells where the rule disagrees with the table.
std::vector<CarlitzCell> carlitz_mismatches(const BivariateDescentTable& table,
                                            CarlitzForm form);

/// True iff every cell satisfies the chosen rule in both directions.
bool carlitz_support_check(const BivariateDescentTable& table,
                           CarlitzForm form = CarlitzForm::sharp);

/// sup_x |P((X − mean)/sd ≤ x) − Φ(x)|, evaluated on both sides of each atom.
double kolmogorov_to_normal(const ExactDistribution& dist, const mpq_class& mean, double sd);

/// Closed forms under the uniform law on S_n.
mpq_class descent_mean_formula(int n);      // (n−1)/2
mpq_class descent_variance_formula(int n);  // (n+1)/12
mpq_class t_mean_formula(int n);            // n−1
mpq_class t_variance_formula(int n);        // (n+7)/6 − 1/n
mpq_class descent_covariance_formula(int n);  // (n−1)/(2n)

/// n! as a big integer.
mpz_class factorial_mpz(int n);

}  // namespace permclt
