#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ellrs {

/// Fixed-length partition lambda_1 >= ... >= lambda_n >= 0.
///
/// Trailing zeros are stored, so two partitions are only comparable when
/// they have the same length n. The default ordering is the canonical
/// one used for every partition-indexed table: by weight, then
/// lexicographically descending within a weight.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  static Partition zero(int n);
  /// (k,...,k,0,...,0) with r copies of k, padded to length n.
  static Partition rectangle(int n, int k, int r);
  /// The column 1^r of length n.
  static Partition column(int n, int r) { return rectangle(n, 1, r); }

  int n() const { return static_cast<int>(parts_.size()); }
  int operator[](int j) const { return parts_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& parts() const { return parts_; }

  int weight() const;
  /// lambda_1 - lambda_n.
  int span() const;
  bool is_zero() const;

  /// Componentwise inclusion lambda_j <= mu_j.
  bool contained_in(const Partition& mu) const;

  Partition operator+(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// 0/1 increment vector theta = nu - lambda of a vertical strip.
struct Strip {
  std::vector<int> theta;
  int size() const;
};

Strip strip_between(const Partition& lam, const Partition& nu);

/// Lambda_0^(n,m): lambda_n = 0 and lambda_1 <= m, in canonical order.
std::vector<Partition> enumerate_level(int n, int m);

/// All partitions of the given weight with n parts, in canonical order.
std::vector<Partition> enumerate_weight(int n, int weight);

/// First strict descent of mu (with mu_{n+1} = 0); n for mu = 0.
int r_index(const Partition& mu);

/// Partitions nu with lam ⊂ nu ⊂ lam + 1^n and |nu| = |lam| + r,
/// in canonical order.
std::vector<Partition> vertical_strips(const Partition& lam, int r);

/// Partitions lam with lam ⊂ nu ⊂ lam + 1^n and |lam| = |nu| - r.
std::vector<Partition> vertical_strips_below(const Partition& nu, int r);

bool dominance_leq(const Partition& lam, const Partition& mu);

/// (nu_1 - nu_n, ..., nu_{n-1} - nu_n, 0).
Partition underline(const Partition& nu);

long long binomial(int n, int k);

}  // namespace ellrs
