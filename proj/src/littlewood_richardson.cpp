#include "ellrs/littlewood_richardson.hpp"

#include <cmath>
#include <optional>
#include <set>

#include "ellrs/errors.hpp"

namespace ellrs {

PolynomialInE multiply_monomial(const PolynomialInE& P, const PolynomialInE& Q) {
  if (P.n() != Q.n()) throw InvalidArgument("multiply_monomial: arity mismatch");
  PolynomialInE out(P.n());
  for (const auto& [k, c] : Q.terms()) out.add_scaled(P.times_monomial(k), c);
  return out;
}

namespace {

// Dominance-maximal key of F; among several maximal keys the
// lexicographically largest, which is also the first one in canonical order
// within the heaviest weight class that contains a maximal key.
Partition dominance_maximal(const PolynomialInE& F) {
  const auto& terms = F.terms();
  std::optional<Partition> best;
  for (const auto& [k, c] : terms) {
    bool maximal = true;
    for (const auto& [other, oc] : terms) {
      if (other != k && dominance_leq(k, other)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if (!best || k.parts() > best->parts()) best = k;
  }
  return *best;
}

}  // namespace

Expansion expand_in_P(const PolynomialInE& F, const ModelParams& params) {
  Expansion out;
  if (F.empty()) return out;
  auto table = EigenpolynomialTable::shared(params);
  const double scale = F.max_abs();
  PolynomialInE residual = F;
  std::set<Partition> peeled;
  // Every peel removes one key and only introduces strictly dominated ones,
  // so the loop is bounded by the size of the dominance-lower cone.
  const std::size_t max_steps = 100000;
  for (std::size_t step = 0; !residual.empty(); ++step) {
    if (step > max_steps) throw NonTerminating("basis expansion exceeded step budget");
    const Partition kappa = dominance_maximal(residual);
    if (peeled.contains(kappa))
      throw NonTerminating("key " + kappa.str() + " reappeared during peeling");
    const double c = residual.coeff(kappa);
    residual.add_scaled(table->get(kappa), -c);
    residual.set(kappa, 0.0);
    // Roundoff residue of already-cancelled terms.
    residual.drop_below(1e-13 * scale);
    out[kappa] += c;
    peeled.insert(kappa);
  }
  return out;
}

Expansion lr_coefficients(const Partition& lam, const Partition& mu, const ModelParams& params) {
  auto table = EigenpolynomialTable::shared(params);
  const PolynomialInE product = multiply_monomial(table->get(lam), table->get(mu));
  Expansion c = expand_in_P(product, params);
  std::erase_if(c, [](const auto& kv) { return kv.second == 0.0; });
  return c;
}

bool lr_support_allowed(const Partition& lam, const Partition& mu, const Partition& nu) {
  return lam.contained_in(nu) && mu.contained_in(nu) && nu.weight() == lam.weight() + mu.weight();
}

namespace detail {

Expansion combine_limit(const Expansion& plus1, const Expansion& minus1, const Expansion& plus2,
                        const Expansion& minus2, double d1, double d2,
                        std::vector<Partition>& flagged) {
  std::set<Partition> keys;
  for (const auto* e : {&plus1, &minus1, &plus2, &minus2})
    for (const auto& [k, v] : *e) keys.insert(k);
  auto at = [](const Expansion& e, const Partition& k) {
    auto it = e.find(k);
    return it == e.end() ? 0.0 : it->second;
  };
  Expansion out;
  for (const auto& k : keys) {
    const double a1 = 0.5 * (at(plus1, k) + at(minus1, k));
    const double a2 = 0.5 * (at(plus2, k) + at(minus2, k));
    const double w1 = d1 * d1;
    const double w2 = d2 * d2;
    const double v = (w1 * a2 - w2 * a1) / (w1 - w2);
    if (std::abs(a1 - a2) > 1e-4) flagged.push_back(k);
    out[k] = v;
  }
  return out;
}

}  // namespace detail

LimitEstimate lr_coefficients_limit(const Partition& lam, const Partition& mu,
                                    const ModelParams& params) {
  return limit_in_g(params, [&](const ModelParams& p) { return lr_coefficients(lam, mu, p); });
}

}  // namespace ellrs
