#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ellrs/eigenpolynomials.hpp"
#include "ellrs/littlewood_richardson.hpp"

// Reference implementations of the degenerate endpoints. None of them goes
// through the elliptic coefficient formulas or the eigenpolynomial table.
namespace ellrs::oracle {

/// Schur polynomial by enumeration of semistandard tableaux with entries
/// in 1..x.size().
Complex schur_eval(const Partition& mu, const std::vector<Complex>& x);

/// Schur polynomial in e_1..e_n via the dual Jacobi-Trudi determinant.
PolynomialInE schur_in_e(const Partition& mu);

/// Macdonald Pieri coefficient at p = 0 as a product of [z]_q.
double macdonald_pieri_p0(const Partition& lam, const Partition& nu, double alpha, double g);

/// Macdonald P_mu(x; q, q^g) in e_1..e_n, q = exp(i alpha), from its own
/// Pieri recursion with macdonald_pieri_p0.
PolynomialInE macdonald_in_e(const Partition& mu, double alpha, double g);

/// Macdonald (q,t)-Littlewood-Richardson coefficients f^nu_{lam,mu}.
Expansion macdonald_lr(const Partition& lam, const Partition& mu, double alpha, double g);

/// S_{lam,nu} at (alpha, g, p) = (2 pi/(m+n), 1, 0) in the sine form
/// q^{-|lam||nu|/n - (n-1)(|lam|+|nu|)/2} s_lam(q^{nu+rho}) s_nu(q^rho).
Eigen::MatrixXcd kac_peterson_s(int n, int m);

/// su(n)_m fusion coefficients from the classical Verlinde sum.
/// Throws NonIntegral when a coefficient is more than 1e-6 from an integer.
std::map<Partition, long long> classical_fusion(const Partition& lam, const Partition& mu, int n,
                                                int m);

/// prod_{j<k} [(k-j+1)g]_{q,d} / [(k-j)g]_{q,d} with d = nu_j - nu_k,
/// the principal specialization q^{-|nu|(n-1)g/2} P_nu(q^{rho_g}).
double principal_specialization(const Partition& nu, double alpha, double g);

struct OracleReport {
  std::string id;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double tolerance = 0.0;
  /// Which deviation the tolerance applies to.
  bool relative = false;
  bool passed = false;
  std::string note;
};

/// Fills passed from the deviations and tolerance.
OracleReport finish(OracleReport r);

/// Degeneration comparisons at rank n, level m.
std::vector<OracleReport> limit_suite(int n, int m);

}  // namespace ellrs::oracle
