// Randomized property checks with fixed seeds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellrs/coeffs.hpp"
#include "ellrs/errors.hpp"
#include "ellrs/lattice.hpp"
#include "ellrs/littlewood_richardson.hpp"

using namespace ellrs;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

  Partition partition(int n, int max_weight) {
    const auto all = enumerate_weight(n, integer(0, max_weight));
    return all[static_cast<std::size_t>(integer(0, static_cast<int>(all.size()) - 1))];
  }

  // Free-mode parameters; resamples until the genericity gate passes.
  ModelParams free_params(int n) {
    for (;;) {
      try {
        return ModelParams::free(n, uniform(0.2, 2.0), uniform(-0.6, 0.6), uniform(0.5, 3.0));
      } catch (const GenericityViolation&) {
      }
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("gauge identity on random strips") {
  Gen gen(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(2, 4);
    const auto P = gen.free_params(n);
    const Partition mu = gen.partition(n, 5);
    const int r = gen.integer(1, n);
    for (const auto& nu : vertical_strips(mu, r)) {
      double lhs = 0, rhs = 0;
      try {
        lhs = psi_prime(mu, nu, P) * c_norm(mu, P);
        rhs = hop_B(mu, nu, P) * c_norm(nu, P);
      } catch (const SingularDenominator&) {
        continue;
      }
      INFO(mu.str() << " -> " << nu.str() << " g=" << P.g << " p=" << P.p);
      CHECK(rel(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("full-lattice commutativity on random functions") {
  Gen gen(202);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.integer(2, 4);
    const auto P = gen.free_params(n);
    LatticeFunction f(n);
    for (int k = 0; k < 12; ++k) f.set(gen.partition(n, 4), Complex(gen.uniform(-1, 1), gen.uniform(-1, 1)));
    const int r = gen.integer(1, n), s = gen.integer(1, n);
    const auto ab = apply_D(r, apply_D(s, f, P), P);
    const auto ba = apply_D(s, apply_D(r, f, P), P);
    double worst = 0, scale = 1e-300;
    for (const auto& [k, v] : ab.values) {
      worst = std::max(worst, std::abs(v - ba.at(k)));
      scale = std::max(scale, std::abs(v));
    }
    for (const auto& [k, v] : ba.values) worst = std::max(worst, std::abs(v - ab.at(k)));
    CHECK(worst < 1e-10 * scale);
  }
}

TEST_CASE("LR coefficients are symmetric and respect support") {
  Gen gen(303);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = gen.integer(2, 3);
    const auto P = gen.free_params(n);
    const Partition lam = gen.partition(n, 3), mu = gen.partition(n, 3);
    const auto a = lr_coefficients(lam, mu, P);
    const auto b = lr_coefficients(mu, lam, P);
    CHECK(a.size() == b.size());
    for (const auto& [k, v] : a) {
      CHECK(lr_support_allowed(lam, mu, k));
      auto it = b.find(k);
      REQUIRE(it != b.end());
      CHECK(rel(v, it->second) < 1e-9);
    }
  }
}

TEST_CASE("Pieri rule holds in the polynomial ring") {
  Gen gen(404);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.integer(2, 3);
    const auto P = gen.free_params(n);
    const Partition mu = gen.partition(n, 4);
    const int s = gen.integer(1, n);
    PolynomialInE lhs = build_P(mu, P).times_monomial(Partition::column(n, s));
    for (const auto& nu : vertical_strips(mu, s)) lhs.add_scaled(build_P(nu, P), -psi_prime(mu, nu, P));
    CHECK(lhs.max_abs() < 1e-9 * std::max(1.0, build_P(mu, P).max_abs()));
  }
}
