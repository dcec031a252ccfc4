#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ellrs/kernel.hpp"
#include "ellrs/partition.hpp"

namespace ellrs {

/// Brackets in a denominator with magnitude below this are treated as
/// genuine poles.
inline constexpr double kSingularThreshold = 1e-12;

/// Hopping weight B_{nu/lam} of the discrete operator D_r, r = |nu| - |lam|.
/// Throws NotAStrip unless lam ⊂ nu ⊂ lam + 1^n.
double hop_B(const Partition& lam, const Partition& nu, const ModelParams& params);
/// Same, for a target given as a raw part vector; rejects non-partitions
/// with NotAStrip.
double hop_B(const Partition& lam, const std::vector<int>& nu_parts,
             const ModelParams& params);
/// The product formula evaluated for an arbitrary 0/1 vector theta, without
/// checking that lam + theta is a partition. Vanishes when it is not.
double hop_weight(const Partition& lam, const std::vector<int>& theta,
                  const ModelParams& params);

/// Pieri coefficient psi'_{nu/lam}.
double psi_prime(const Partition& lam, const Partition& nu, const ModelParams& params);

/// Same product with every bracket replaced by its trigonometric limit
/// [z]_q; this is the p -> 0 value of psi_prime.
double psi_prime_trig(const Partition& lam, const Partition& nu, double alpha, double g);

/// Normalization c_mu = prod_{j<k} [(k-j)g]_{d} / [(k-j+1)g]_{d}, d = mu_j - mu_k.
double c_norm(const Partition& mu, const ModelParams& params);

/// Orthogonality weight Delta_lam.
double delta_weight(const Partition& lam, const ModelParams& params);

/// Memo tables for the coefficient evaluators at one parameter point.
///
/// Entries are written once and never modified. Lookups for a different
/// parameter point are rejected rather than served from the wrong table.
class CoeffCache {
 public:
  explicit CoeffCache(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  double hop_B(const Partition& lam, const Partition& nu);
  double psi_prime(const Partition& lam, const Partition& nu);
  double c_norm(const Partition& mu);
  double delta_weight(const Partition& lam);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept;
  };
  template <class Map, class Key, class F>
  double lookup(Map& map, const Key& key, F&& compute);

  ModelParams params_;
  std::uint64_t fingerprint_;
  std::mutex mutex_;
  std::unordered_map<std::pair<Partition, Partition>, double, PairHash> hop_;
  std::unordered_map<std::pair<Partition, Partition>, double, PairHash> psi_;
  std::unordered_map<Partition, double, PartitionHash> c_;
  std::unordered_map<Partition, double, PartitionHash> delta_;
};

}  // namespace ellrs
