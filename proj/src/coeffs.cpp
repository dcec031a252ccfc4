#include "ellrs/coeffs.hpp"

#include <cmath>

#include "ellrs/errors.hpp"

namespace ellrs {

namespace {

double checked_denominator(double value, double arg) {
  if (std::abs(value) < kSingularThreshold)
    throw SingularDenominator("bracket [" + std::to_string(arg) + "] vanishes in a denominator");
  return value;
}

double den_bracket(double z, const ModelParams& params) {
  return checked_denominator(bracket(z, params), z);
}

double den_factorial(double z, int k, const ModelParams& params) {
  double r = 1.0;
  for (int l = 0; l < k; ++l) r *= den_bracket(z + l, params);
  return r;
}

void require_strip(const Partition& lam, const Partition& nu) {
  if (lam.n() != nu.n()) throw NotAStrip("length mismatch");
  for (int j = 0; j < lam.n(); ++j) {
    const int d = nu[j] - lam[j];
    if (d != 0 && d != 1) throw NotAStrip(nu.str() + "/" + lam.str() + " is not a vertical strip");
  }
}

// psi' product over pairs with theta_j - theta_k = -1; den throws on a
// vanishing denominator.
template <class Num, class Den>
double psi_product(const Partition& lam, const Partition& nu, double g, Num&& num, Den&& den) {
  const int n = lam.n();
  double r = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int tj = nu[j] - lam[j];
      const int tk = nu[k] - lam[k];
      if (tj - tk != -1) continue;
      const double kj = k - j;
      const double dnu = nu[j] - nu[k];
      const double dlam = lam[j] - lam[k];
      r *= num(dnu + g * (kj + 1)) / den(dnu + g * kj);
      r *= num(dlam + g * (kj - 1)) / den(dlam + g * kj);
    }
  }
  return r;
}

}  // namespace

double hop_weight(const Partition& lam, const std::vector<int>& theta,
                  const ModelParams& params) {
  const int n = lam.n();
  if (static_cast<int>(theta.size()) != n) throw InvalidArgument("theta length mismatch");
  const double g = params.g;
  double r = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double dlam = lam[j] - lam[k];
      const double kj = k - j;
      const auto tj = theta[static_cast<std::size_t>(j)];
      const auto tk = theta[static_cast<std::size_t>(k)];
      if (tj == tk) continue;  // factor is 1
      r *= bracket(dlam + g * (kj + tj - tk), params) / den_bracket(dlam + g * kj, params);
    }
  }
  return r;
}

double hop_B(const Partition& lam, const Partition& nu, const ModelParams& params) {
  require_strip(lam, nu);
  return hop_weight(lam, strip_between(lam, nu).theta, params);
}

double hop_B(const Partition& lam, const std::vector<int>& nu_parts, const ModelParams& params) {
  if (static_cast<int>(nu_parts.size()) != lam.n()) throw NotAStrip("length mismatch");
  for (std::size_t j = 0; j + 1 < nu_parts.size(); ++j) {
    if (nu_parts[j] < nu_parts[j + 1])
      throw NotAStrip("target is not a partition");
  }
  return hop_B(lam, Partition(nu_parts), params);
}

double psi_prime(const Partition& lam, const Partition& nu, const ModelParams& params) {
  require_strip(lam, nu);
  return psi_product(
      lam, nu, params.g, [&](double z) { return bracket(z, params); },
      [&](double z) { return den_bracket(z, params); });
}

double psi_prime_trig(const Partition& lam, const Partition& nu, double alpha, double g) {
  require_strip(lam, nu);
  return psi_product(
      lam, nu, g, [&](double z) { return trig_bracket(z, alpha); },
      [&](double z) { return checked_denominator(trig_bracket(z, alpha), z); });
}

double c_norm(const Partition& mu, const ModelParams& params) {
  const int n = mu.n();
  const double g = params.g;
  double r = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int d = mu[j] - mu[k];
      if (d == 0) continue;
      r *= elliptic_factorial((k - j) * g, d, params) / den_factorial((k - j + 1) * g, d, params);
    }
  }
  return r;
}

double delta_weight(const Partition& lam, const ModelParams& params) {
  const int n = lam.n();
  const double g = params.g;
  double r = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int d = lam[j] - lam[k];
      const double kj = k - j;
      r *= bracket(d + kj * g, params) / den_bracket(kj * g, params);
      r *= elliptic_factorial((kj + 1) * g, d, params) /
           den_factorial(1 + (kj - 1) * g, d, params);
    }
  }
  return r;
}

std::size_t CoeffCache::PairHash::operator()(
    const std::pair<Partition, Partition>& k) const noexcept {
  PartitionHash h;
  return h(k.first) * 31 + h(k.second);
}

CoeffCache::CoeffCache(const ModelParams& params)
    : params_(params), fingerprint_(params.fingerprint()) {}

template <class Map, class Key, class F>
double CoeffCache::lookup(Map& map, const Key& key, F&& compute) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = map.find(key); it != map.end()) return it->second;
  }
  // Computed outside the lock; a racing writer stores the same value.
  const double v = compute();
  std::lock_guard lock(mutex_);
  map.emplace(key, v);
  return v;
}

double CoeffCache::hop_B(const Partition& lam, const Partition& nu) {
  return lookup(hop_, std::pair{lam, nu}, [&] { return ellrs::hop_B(lam, nu, params_); });
}

double CoeffCache::psi_prime(const Partition& lam, const Partition& nu) {
  return lookup(psi_, std::pair{lam, nu}, [&] { return ellrs::psi_prime(lam, nu, params_); });
}

double CoeffCache::c_norm(const Partition& mu) {
  return lookup(c_, mu, [&] { return ellrs::c_norm(mu, params_); });
}

double CoeffCache::delta_weight(const Partition& lam) {
  return lookup(delta_, lam, [&] { return ellrs::delta_weight(lam, params_); });
}

}  // namespace ellrs
