#pragma once

#include <map>

#include "ellrs/eigenpolynomials.hpp"

namespace ellrs {

using Expansion = std::map<Partition, double>;

/// Product of two polynomials in e (keys add componentwise).
PolynomialInE multiply_monomial(const PolynomialInE& P, const PolynomialInE& Q);

/// Coefficients of F in the basis {P_kappa}.
///
/// Peels off the dominance-maximal remaining key (lexicographically largest
/// among incomparable ones) until nothing is left. Throws NonTerminating if
/// a peel step re-creates a key that is not strictly dominated, or if the
/// residual does not fall below 1e-9 of the initial scale.
Expansion expand_in_P(const PolynomialInE& F, const ModelParams& params);

/// Elliptic Littlewood-Richardson coefficients c^nu_{lam,mu}:
/// P_lam P_mu = sum_nu c^nu_{lam,mu} P_nu.
Expansion lr_coefficients(const Partition& lam, const Partition& mu, const ModelParams& params);

/// Support condition lam ⊂ nu, mu ⊂ nu, |nu| = |lam| + |mu|.
bool lr_support_allowed(const Partition& lam, const Partition& mu, const Partition& nu);

/// Result of the rational-g limit protocol.
struct LimitEstimate {
  Expansion value;
  /// Keys whose two Richardson estimates differ by more than 1e-4.
  std::vector<Partition> flagged;
};

/// Evaluates f at g +- delta for delta in {1e-5, 1e-6}, averages each
/// symmetric pair and Richardson-extrapolates the two averages in delta^2.
/// f receives parameters with g shifted (alpha follows g in level-locked
/// mode, stays fixed in free mode).
template <class F>
LimitEstimate limit_in_g(const ModelParams& params, F&& f);

LimitEstimate lr_coefficients_limit(const Partition& lam, const Partition& mu,
                                    const ModelParams& params);

// ---------------------------------------------------------------------------

namespace detail {
Expansion combine_limit(const Expansion& plus1, const Expansion& minus1, const Expansion& plus2,
                        const Expansion& minus2, double d1, double d2,
                        std::vector<Partition>& flagged);
}

template <class F>
LimitEstimate limit_in_g(const ModelParams& params, F&& f) {
  constexpr double d1 = 1e-5;
  constexpr double d2 = 1e-6;
  LimitEstimate out;
  out.value = detail::combine_limit(f(params.with_g(params.g + d1)), f(params.with_g(params.g - d1)),
                                    f(params.with_g(params.g + d2)), f(params.with_g(params.g - d2)),
                                    d1, d2, out.flagged);
  return out;
}

}  // namespace ellrs
