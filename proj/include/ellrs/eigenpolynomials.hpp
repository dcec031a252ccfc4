#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ellrs/coeffs.hpp"
#include "ellrs/kernel.hpp"
#include "ellrs/partition.hpp"

namespace ellrs {

/// Coefficients below this fraction of the largest one are dropped.
inline constexpr double kPruneRelative = 1e-13;

/// Sparse real polynomial in e_1, ..., e_n.
///
/// The key mu stands for the monomial e_mu = prod_j e_j^{mu_j - mu_{j+1}}
/// (mu_{n+1} = 0), so e_mu e_kappa = e_{mu + kappa} and e_r = e_{1^r}.
/// Keys iterate in canonical partition order.
class PolynomialInE {
 public:
  using Map = std::map<Partition, double>;

  explicit PolynomialInE(int n) : n_(n) {}
  static PolynomialInE constant(int n, double c);
  static PolynomialInE monomial(const Partition& key, double c = 1.0);

  int n() const { return n_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  double coeff(const Partition& key) const;
  void set(const Partition& key, double value);
  /// this += factor * other.
  void add_scaled(const PolynomialInE& other, double factor);
  /// Product with the monomial e_key.
  PolynomialInE times_monomial(const Partition& key) const;
  double max_abs() const;
  /// Drop coefficients with |c| < rel * max_abs().
  void prune(double rel = kPruneRelative);
  /// Drop coefficients with |c| < cut.
  void drop_below(double cut);

 private:
  int n_;
  Map terms_;
};

/// Joint-eigenvalue coordinates e_1, ..., e_n.
using SpectralEvaluation = std::vector<Complex>;

/// Sum of coeff(nu) * e_nu at the point e (length n).
Complex evaluate(const PolynomialInE& P, const SpectralEvaluation& e);

/// Sum of |coeff(nu)| * |e_nu|; the natural magnitude scale for evaluate.
double evaluation_scale(const PolynomialInE& P, const SpectralEvaluation& e);

/// Elementary symmetric polynomials (e_1(x), ..., e_n(x)).
SpectralEvaluation elementary_symmetric(const std::vector<Complex>& x);

/// Memoized eigenpolynomials P_mu at one parameter point.
///
/// P_0 = 1; otherwise with r = r_index(mu) and lam = mu - 1^r,
///   P_mu = e_r P_lam - sum_{nu != mu} psi'_{nu/lam} P_nu,
/// nu running over the vertical r-strips on lam. Every dependency of mu has
/// smaller (d, r) in lexicographic order or smaller weight, so the table is
/// filled from an explicit worklist instead of recursion.
class EigenpolynomialTable {
 public:
  explicit EigenpolynomialTable(const ModelParams& params);

  /// Process-wide table for params, keyed by params.fingerprint().
  static std::shared_ptr<EigenpolynomialTable> shared(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  CoeffCache& coeffs() { return coeffs_; }

  const PolynomialInE& get(const Partition& mu);

 private:
  PolynomialInE compute(const Partition& mu);
  std::vector<Partition> dependencies(const Partition& mu) const;

  ModelParams params_;
  CoeffCache coeffs_;
  std::mutex mutex_;
  std::unordered_map<Partition, PolynomialInE, PartitionHash> table_;
};

/// P_mu at params, from the shared table.
PolynomialInE build_P(const Partition& mu, const ModelParams& params);

/// p_mu(e) = c_mu P_mu(e).
Complex normalized_p(const Partition& mu, const SpectralEvaluation& e,
                     const ModelParams& params);

/// R_mu(x) = P_mu(e) with e_r the r-th elementary symmetric polynomial of x.
Complex evaluate_R(const Partition& mu, const std::vector<Complex>& x,
                   const ModelParams& params);

}  // namespace ellrs
