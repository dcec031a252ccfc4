#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellrs/coeffs.hpp"
#include "ellrs/fusion.hpp"

using namespace ellrs;
using doctest::Approx;

namespace {
double at(const Expansion& e, const Partition& k) {
  auto it = e.find(k);
  return it == e.end() ? 0.0 : it->second;
}
}  // namespace

TEST_CASE("reduce_mod_ideal") {
  const auto P = ModelParams::locked(2, 1, 0.7, 0.0);
  const Expansion F{{Partition{2, 0}, 3.0}, {Partition{1, 1}, 2.0}, {Partition{2, 1}, 5.0}};
  const auto R = reduce_mod_ideal(F, P);
  CHECK(R.size() == 2);
  CHECK(at(R, Partition{0, 0}) == 2.0);
  CHECK(at(R, Partition{1, 0}) == 5.0);
}

TEST_CASE("n = 2, m = 1 fusion by hand") {
  for (double g : {0.7, 1.3})
    for (double p : {0.0, 0.4}) {
      const auto P = ModelParams::locked(2, 1, g, p);
      auto b = [&](double z) { return bracket(z, P); };
      const double want = b(2 * g) * b(1) / (b(g) * b(1 + g));
      const Partition phi{1, 0}, zero{0, 0};
      for (auto route : {Route::Verlinde, Route::LR}) {
        const auto T = fusion_table(P, route);
        CHECK(T.get(phi, phi, zero) == Approx(want).epsilon(1e-8));
        CHECK(std::abs(T.get(phi, phi, phi)) < 1e-9);
        CHECK(T.get(zero, phi, phi) == Approx(1.0).epsilon(1e-9));
      }
    }
}

TEST_CASE("su(2) level 2 at g = 1") {
  const auto T = fusion_table(ModelParams::locked(2, 2, 1.0, 0.3), Route::Verlinde);
  const Partition a{0, 0}, b{1, 0}, c{2, 0};
  CHECK(T.get(b, b, a) == Approx(1.0).epsilon(1e-9));
  CHECK(T.get(b, b, c) == Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(T.get(b, b, b)) < 1e-9);
  CHECK(T.get(c, c, a) == Approx(1.0).epsilon(1e-9));
  CHECK(T.get(b, c, b) == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("LR route at g = 1") {
  const auto r = structure_constants_lr(Partition{1, 0}, Partition{1, 0}, ModelParams::locked(2, 1, 1.0, 0.0));
  CHECK(r.flagged.empty());
  CHECK(at(r.value, Partition{0, 0}) == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("LR route Pieri special case") {
  const auto P = ModelParams::locked(3, 2, 0.7, 0.4);
  const Partition lam{1, 0, 0};
  const auto r = structure_constants_lr(lam, Partition{1, 1, 0}, P);
  CHECK_FALSE(r.limit_used);
  Expansion want;
  for (const auto& nu : vertical_strips(lam, 2))
    if (nu.span() <= 2) want[underline(nu)] += psi_prime(lam, nu, P);
  for (const auto& [k, v] : want) CHECK(at(r.value, k) == Approx(v).epsilon(1e-11));
  CHECK(r.value.size() == want.size());
}

TEST_CASE("first row of S is 1 / c") {
  const auto P = ModelParams::locked(3, 2, 1.3, 0.4);
  const auto sm = s_matrix(P);
  for (std::size_t v = 0; v < sm.basis.size(); ++v) {
    const Complex s = sm.S(0, static_cast<Eigen::Index>(v));
    CHECK(std::abs(s - Complex(1.0 / c_norm(sm.basis[v], P))) < 1e-12);
  }
  const Eigen::MatrixXcd I = sm.S * sm.Sinv;
  CHECK((I - Eigen::MatrixXcd::Identity(I.rows(), I.cols())).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(sm.det_abs == Approx(sm.det_abs_closed_form).epsilon(1e-8));
}

TEST_CASE("n-value closed form at g = 1, p = 0") {
  for (int n : {2, 3})
    for (int m : {1, 2}) {
      const auto sm = s_matrix(ModelParams::locked(n, m, 1.0, 0.0));
      CHECK(sm.n_value == Approx(kac_peterson_n_value(n, m)).epsilon(1e-10));
    }
}

TEST_CASE("route names") {
  CHECK(to_string(Route::Verlinde) == "verlinde");
  CHECK(to_string(Route::LR) == "lr");
}
