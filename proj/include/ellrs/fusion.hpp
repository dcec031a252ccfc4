#pragma once

#include <map>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "ellrs/lattice.hpp"
#include "ellrs/littlewood_richardson.hpp"

namespace ellrs {

/// Drops keys with span > m and re-keys the rest to underline(nu).
Expansion reduce_mod_ideal(const Expansion& F, const ModelParams& params);

struct SMatrix {
  ModelParams params;
  std::vector<Partition> basis;
  /// Rows: polynomial label lam. Columns: spectral label nu.
  Eigen::MatrixXcd S;
  /// Rows: spectral label. Columns: polynomial label.
  Eigen::MatrixXcd Sinv;
  /// Sum of Delta_lam over the level-m alcove.
  double n_value = 0.0;
  double det_abs = 0.0;
  /// (prod_lam c_lam^2 sqrt(Delta_lam hat Delta_lam))^{-1}.
  double det_abs_closed_form = 0.0;
};

SMatrix s_matrix(const ModelParams& params);

/// (2 sin(pi/(m+n)))^{-n(n-1)} n (n+m)^{n-1} / prod_{j<k} [k-j]_q^2 at
/// q = exp(2 pi i/(m+n)).
double kac_peterson_n_value(int n, int m);

/// Imaginary parts above this (relative to max(1, |N|)) raise ImaginaryResidue.
inline constexpr double kImaginaryTolerance = 1e-8;

/// N^kappa_{lam,mu} from the Verlinde sum over the joint spectrum.
Expansion structure_constants_verlinde(const Partition& lam, const Partition& mu,
                                       const ModelParams& params);
Expansion structure_constants_verlinde(const Partition& lam, const Partition& mu,
                                       const SMatrix& sm);

/// N^kappa_{lam,mu} = <P_lam P_mu, P_kappa> / <P_kappa, P_kappa> in the
/// dual inner product.
Expansion structure_constants_projection(const Partition& lam, const Partition& mu,
                                         const ModelParams& params);

struct LrRouteResult {
  Expansion value;
  bool limit_used = false;
  std::vector<Partition> flagged;
};

/// reduce_mod_ideal(c_{lam,mu}). Falls back to the limit protocol in g when
/// a denominator vanishes at the given coupling.
LrRouteResult structure_constants_lr(const Partition& lam, const Partition& mu,
                                     const ModelParams& params);

enum class Route { Verlinde, LR };
std::string to_string(Route r);

struct FusionTable {
  ModelParams params;
  Route method = Route::Verlinde;
  std::vector<Partition> basis;
  std::map<std::tuple<Partition, Partition, Partition>, double> N;
  /// Entries obtained by the limit protocol with disagreeing estimates.
  std::vector<std::tuple<Partition, Partition, Partition>> flagged;

  double get(const Partition& lam, const Partition& mu, const Partition& kappa) const;
};

/// Entries with |N| <= 1e-12 are omitted.
FusionTable fusion_table(const ModelParams& params, Route route);

/// max |a - b| over the union of both tables' keys.
double max_difference(const FusionTable& a, const FusionTable& b);

}  // namespace ellrs
