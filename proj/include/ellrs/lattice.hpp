#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "ellrs/eigenpolynomials.hpp"

namespace ellrs {

/// Finitely supported complex function on partitions of length n.
struct LatticeFunction {
  int n = 0;
  std::map<Partition, Complex> values;

  explicit LatticeFunction(int n_) : n(n_) {}
  Complex at(const Partition& lam) const;
  void set(const Partition& lam, Complex v);
};

/// (D_r f)(lam) = sum over vertical r-strips nu on lam of B_{nu/lam} f(nu).
Complex apply_D(int r, const LatticeFunction& f, const Partition& lam, const ModelParams& params);

/// D_r f on its full (finite) support.
LatticeFunction apply_D(int r, const LatticeFunction& f, const ModelParams& params);

/// D_r truncated to Lambda_0^(n,m): entry (lam, underline(nu)) = B_{nu/lam}
/// for strips with span(nu) <= m.
struct TruncatedOperator {
  int r = 0;
  std::vector<Partition> basis;
  Eigen::MatrixXd matrix;
  ModelParams params;
};

TruncatedOperator build_truncated(int r, const ModelParams& params);

/// ||M M* - M* M||_F / ||M||_F^2 for M = W D W^{-1}, W = diag(sqrt(Delta)).
double normality_defect(const TruncatedOperator& op);

/// The p = 0 spectrum in closed form at the level-locked alpha of params.
/// Entry r-1 of the result is e_{r,nu}; the trailing 1 is included.
SpectralEvaluation closed_form_spectrum(const Partition& nu, const ModelParams& params);

struct SpectralPoint {
  Partition label;
  SpectralEvaluation e;
  /// Eigenvector entries over the basis, normalized to 1 at lam = 0.
  std::vector<Complex> eigenvector;
  double dual_norm = 0.0;
};

struct HomotopyStep {
  double p_from = 0.0;
  double p_to = 0.0;
  double min_gap = 0.0;
  double max_move = 0.0;
  bool accepted = false;
};

struct SpectrumResult {
  ModelParams params;
  std::vector<Partition> basis;
  /// One point per label, in canonical label order.
  std::vector<SpectralPoint> points;
  std::uint64_t seed = 0;
  std::vector<HomotopyStep> steps;

  const SpectralPoint& at(const Partition& label) const;
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Joint spectrum of D_1, ..., D_{n-1} on Lambda_0^(n,m).
///
/// Labels are assigned at p = 0 from the closed form and carried to the
/// target p by continuation (start step 0.05, halved on ambiguity down to
/// 1e-4). Throws TrackingAmbiguity when the floor is reached and
/// DegenerateCombination if no simple random combination is found.
SpectrumResult joint_spectrum(const ModelParams& params, std::uint64_t seed = kDefaultSeed);

/// Shared result for (params, kDefaultSeed).
const SpectrumResult& cached_spectrum(const ModelParams& params);

struct OrthogonalityDeviation {
  double off_diagonal = 0.0;
  double diagonal_relative = 0.0;
  double max() const { return off_diagonal > diagonal_relative ? off_diagonal : diagonal_relative; }
};

/// Deviation of <P_lam, P_mu>_{hat Delta} from delta_{lam,mu} / (c_lam^2 Delta_lam).
OrthogonalityDeviation dual_orthogonality_check(const SpectrumResult& spectrum);

}  // namespace ellrs
