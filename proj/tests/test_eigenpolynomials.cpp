#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellrs/eigenpolynomials.hpp"
#include "ellrs/oracles.hpp"

using namespace ellrs;
using doctest::Approx;

namespace {
constexpr double kAlpha = 2.399827;
}

TEST_CASE("P_0 and columns") {
  const auto P = ModelParams::free(3, 0.7, 0.3, kAlpha);
  const auto p0 = build_P(Partition::zero(3), P);
  REQUIRE(p0.size() == 1);
  CHECK(p0.coeff(Partition::zero(3)) == 1.0);
  for (int r = 1; r <= 3; ++r) {
    const auto col = build_P(Partition::column(3, r), P);
    REQUIRE(col.size() == 1);
    CHECK(col.coeff(Partition::column(3, r)) == 1.0);
  }
}

TEST_CASE("n = 2, mu = (2,0) by hand") {
  for (double g : {0.7, 1.3})
    for (double p : {0.0, 0.4}) {
      const auto P = ModelParams::free(2, g, p, kAlpha);
      auto b = [&](double z) { return bracket(z, P); };
      const auto poly = build_P(Partition{2, 0}, P);
      CHECK(poly.coeff(Partition{2, 0}) == 1.0);
      CHECK(poly.coeff(Partition{1, 1}) ==
            Approx(-b(2 * g) * b(1) / (b(g) * b(1 + g))).epsilon(1e-13));
      CHECK(poly.size() == 2);
    }
}

TEST_CASE("rectangle m^n is e_n^m") {
  const auto P = ModelParams::free(3, 0.7, 0.2, kAlpha);
  const auto poly = build_P(Partition::rectangle(3, 2, 3), P);
  REQUIRE(poly.size() == 1);
  CHECK(poly.coeff(Partition{2, 2, 2}) == 1.0);
}

TEST_CASE("evaluate") {
  const auto P = ModelParams::free(2, 1.0, 0.0, kAlpha);
  const auto poly = build_P(Partition{2, 0}, P);
  CHECK(std::abs(evaluate(poly, {2.0, 1.0}) - Complex(3.0)) < 1e-12);
  CHECK(std::abs(evaluate(PolynomialInE::constant(2, 1.0), {5.0, 7.0}) - Complex(1.0)) < 1e-15);
}

TEST_CASE("normalized_p for (1,0)") {
  const auto P = ModelParams::locked(2, 2, 0.7, 0.3);
  const SpectralEvaluation e{Complex(0.4, 0.2), 1.0};
  const Complex want = bracket(0.7, P) / bracket(1.4, P) * e[0];
  CHECK(std::abs(normalized_p(Partition{1, 0}, e, P) - want) < 1e-14);
  CHECK(std::abs(normalized_p(Partition::zero(2), e, P) - Complex(1.0)) < 1e-15);
}

TEST_CASE("evaluate_R") {
  const auto P = ModelParams::free(3, 1.0, 0.0, kAlpha);
  const std::vector<Complex> x{1.0, 1.0, 1.0};
  CHECK(std::abs(evaluate_R(Partition{2, 1, 0}, x, P) - Complex(8.0)) < 1e-10);
  const std::vector<Complex> y{0.3, Complex(0.2, 1.0), -1.1};
  CHECK(std::abs(evaluate_R(Partition{1, 0, 0}, y, P) - (y[0] + y[1] + y[2])) < 1e-14);
  CHECK(std::abs(evaluate_R(Partition::zero(3), y, P) - Complex(1.0)) < 1e-15);
}

TEST_CASE("elementary symmetric polynomials") {
  const auto e = elementary_symmetric({1.0, 2.0, 3.0});
  REQUIRE(e.size() == 3);
  CHECK(e[0].real() == Approx(6.0));
  CHECK(e[1].real() == Approx(11.0));
  CHECK(e[2].real() == Approx(6.0));
}

TEST_CASE("g = 1 coefficients are Schur in e") {
  const auto P = ModelParams::free(3, 1.0, 0.4, kAlpha);
  for (int w = 0; w <= 4; ++w)
    for (const auto& mu : enumerate_weight(3, w)) {
      const auto a = build_P(mu, P);
      const auto b = oracle::schur_in_e(mu);
      for (const auto& [k, v] : b.terms()) CHECK(a.coeff(k) == Approx(v).epsilon(1e-10));
      for (const auto& [k, v] : a.terms()) CHECK(b.coeff(k) == Approx(v).epsilon(1e-10));
    }
}

TEST_CASE("table memoizes by fingerprint") {
  const auto P = ModelParams::free(2, 0.7, 0.1, kAlpha);
  auto t1 = EigenpolynomialTable::shared(P);
  auto t2 = EigenpolynomialTable::shared(P);
  CHECK(t1.get() == t2.get());
  CHECK(EigenpolynomialTable::shared(P.with_p(0.2)).get() != t1.get());
}

TEST_CASE("polynomial arithmetic helpers") {
  PolynomialInE a(2);
  a.set(Partition{1, 0}, 2.0);
  a.set(Partition{1, 1}, 1e-20);
  a.prune();
  CHECK(a.size() == 1);
  const auto b = a.times_monomial(Partition{1, 1});
  CHECK(b.coeff(Partition{2, 1}) == 2.0);
  a.add_scaled(a, -1.0);
  CHECK(a.empty());
}
