#include "ellrs/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ellrs/errors.hpp"

namespace ellrs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition must have length >= 1");
  for (std::size_t j = 0; j + 1 < parts_.size(); ++j) {
    if (parts_[j] < parts_[j + 1])
      throw InvalidArgument("partition parts must be non-increasing: " + str());
  }
  if (parts_.back() < 0)
    throw InvalidArgument("partition parts must be non-negative: " + str());
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::zero(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::rectangle(int n, int k, int r) {
  if (r < 0 || r > n) throw InvalidArgument("rectangle: need 0 <= r <= n");
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::fill(v.begin(), v.begin() + r, k);
  return Partition(std::move(v));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::span() const { return parts_.front() - parts_.back(); }

bool Partition::is_zero() const { return parts_.front() == 0; }

bool Partition::contained_in(const Partition& mu) const {
  if (mu.n() != n()) return false;
  for (int j = 0; j < n(); ++j)
    if ((*this)[j] > mu[j]) return false;
  return true;
}

Partition Partition::operator+(const Partition& other) const {
  if (other.n() != n()) throw InvalidArgument("partition length mismatch");
  std::vector<int> v(parts_);
  for (int j = 0; j < n(); ++j) v[static_cast<std::size_t>(j)] += other[j];
  return Partition(std::move(v));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) os << ',';
    os << parts_[j];
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  // Lexicographically larger comes first.
  return b.parts_ <=> a.parts_;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int Strip::size() const { return std::accumulate(theta.begin(), theta.end(), 0); }

Strip strip_between(const Partition& lam, const Partition& nu) {
  if (lam.n() != nu.n()) throw NotAStrip("length mismatch");
  Strip s;
  s.theta.resize(static_cast<std::size_t>(lam.n()));
  for (int j = 0; j < lam.n(); ++j) {
    int d = nu[j] - lam[j];
    if (d != 0 && d != 1)
      throw NotAStrip(nu.str() + "/" + lam.str() + " is not a vertical strip");
    s.theta[static_cast<std::size_t>(j)] = d;
  }
  return s;
}

std::vector<Partition> enumerate_level(int n, int m) {
  if (n < 1 || m < 0) throw InvalidArgument("enumerate_level: need n >= 1, m >= 0");
  std::vector<Partition> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  // Fill positions 0..n-2 with non-increasing values in [0, m].
  auto rec = [&](auto&& self, int j, int cap) -> void {
    if (j == n - 1) {
      out.emplace_back(v);
      return;
    }
    for (int x = 0; x <= cap; ++x) {
      v[static_cast<std::size_t>(j)] = x;
      self(self, j + 1, x);
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_weight(int n, int weight) {
  std::vector<Partition> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int remaining, int cap) -> void {
    if (j == n) {
      if (remaining == 0) out.emplace_back(v);
      return;
    }
    int hi = std::min(cap, remaining);
    // Remaining rows can hold at most hi each.
    for (int x = hi; x >= 0; --x) {
      if (x * (n - j) < remaining) break;
      v[static_cast<std::size_t>(j)] = x;
      self(self, j + 1, remaining - x, x);
    }
  };
  rec(rec, 0, weight, weight);
  std::sort(out.begin(), out.end());
  return out;
}

int r_index(const Partition& mu) {
  const int n = mu.n();
  for (int j = 0; j < n; ++j) {
    int next = (j + 1 < n) ? mu[j + 1] : 0;
    if (mu[j] - next > 0) return j + 1;
  }
  return n;
}

std::vector<Partition> vertical_strips(const Partition& lam, int r) {
  const int n = lam.n();
  if (r < 1 || r > n) throw InvalidArgument("vertical_strips: need 1 <= r <= n");
  std::vector<Partition> out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  // prev_permutation walks all r-subsets starting from the lexicographically
  // largest mask.
  do {
    std::vector<int> v(lam.parts());
    bool ok = true;
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] += mask[static_cast<std::size_t>(j)];
    for (int j = 0; j + 1 < n; ++j)
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(j + 1)]) ok = false;
    if (ok) out.emplace_back(std::move(v));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> vertical_strips_below(const Partition& nu, int r) {
  const int n = nu.n();
  if (r < 1 || r > n) throw InvalidArgument("vertical_strips_below: need 1 <= r <= n");
  std::vector<Partition> out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  do {
    std::vector<int> v(nu.parts());
    bool ok = true;
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] -= mask[static_cast<std::size_t>(j)];
    if (v.back() < 0) ok = false;
    for (int j = 0; ok && j + 1 < n; ++j)
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(j + 1)]) ok = false;
    if (ok) out.emplace_back(std::move(v));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
  if (lam.n() != mu.n() || lam.weight() != mu.weight()) return false;
  int a = 0, b = 0;
  for (int j = 0; j < lam.n(); ++j) {
    a += lam[j];
    b += mu[j];
    if (a > b) return false;
  }
  return true;
}

Partition underline(const Partition& nu) {
  std::vector<int> v(nu.parts());
  const int last = v.back();
  for (auto& x : v) x -= last;
  return Partition(std::move(v));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace ellrs
