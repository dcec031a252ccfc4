#include "ellrs/fusion.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#include "ellrs/errors.hpp"

namespace ellrs {

Expansion reduce_mod_ideal(const Expansion& F, const ModelParams& params) {
  Expansion out;
  for (const auto& [nu, c] : F) {
    if (nu.span() > params.m) continue;
    out[underline(nu)] += c;
  }
  return out;
}

namespace {

void require_alcove(const Partition& lam, const ModelParams& params) {
  if (lam.n() != params.n || lam[params.n - 1] != 0 || lam[0] > params.m)
    throw InvalidArgument(lam.str() + " is not in the level-" + std::to_string(params.m) + " alcove");
}

// P_lam(e_nu) for every basis label lam (rows) and spectral point nu (cols).
Eigen::MatrixXcd polynomial_values(const SpectrumResult& spec) {
  auto table = EigenpolynomialTable::shared(spec.params);
  const auto N = static_cast<Eigen::Index>(spec.basis.size());
  Eigen::MatrixXcd V(N, N);
  for (Eigen::Index l = 0; l < N; ++l) {
    const auto& P = table->get(spec.basis[static_cast<std::size_t>(l)]);
    for (Eigen::Index v = 0; v < N; ++v) V(l, v) = evaluate(P, spec.points[static_cast<std::size_t>(v)].e);
  }
  return V;
}

double real_part_checked(Complex z) {
  if (std::abs(z.imag()) > kImaginaryTolerance * std::max(1.0, std::abs(z.real())))
    throw ImaginaryResidue("structure constant has imaginary part " + std::to_string(z.imag()));
  return z.real();
}

std::size_t index_of(const std::vector<Partition>& basis, const Partition& lam) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == lam) return i;
  throw InvalidArgument(lam.str() + " not in basis");
}

}  // namespace

SMatrix s_matrix(const ModelParams& params) {
  const SpectrumResult& spec = cached_spectrum(params);
  auto table = EigenpolynomialTable::shared(params);
  auto& cc = table->coeffs();
  SMatrix out;
  out.params = params;
  out.basis = spec.basis;
  const auto N = static_cast<Eigen::Index>(spec.basis.size());
  const Eigen::MatrixXcd V = polynomial_values(spec);
  out.S.resize(N, N);
  out.Sinv.resize(N, N);
  std::vector<double> c(static_cast<std::size_t>(N)), delta(static_cast<std::size_t>(N)),
      dual(static_cast<std::size_t>(N));
  for (Eigen::Index i = 0; i < N; ++i) {
    const auto& lam = spec.basis[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(i)] = cc.c_norm(lam);
    delta[static_cast<std::size_t>(i)] = cc.delta_weight(lam);
    dual[static_cast<std::size_t>(i)] = spec.points[static_cast<std::size_t>(i)].dual_norm;
  }
  for (Eigen::Index l = 0; l < N; ++l)
    for (Eigen::Index v = 0; v < N; ++v) out.S(l, v) = V(l, v) / c[static_cast<std::size_t>(v)];
  for (Eigen::Index v = 0; v < N; ++v) {
    for (Eigen::Index k = 0; k < N; ++k) {
      const auto vi = static_cast<std::size_t>(v);
      const auto ki = static_cast<std::size_t>(k);
      out.Sinv(v, k) =
          c[vi] * c[vi] * dual[vi] * std::conj(out.S(k, v)) * c[ki] * c[ki] * delta[ki];
    }
  }
  double log_closed = 0.0;
  for (Eigen::Index i = 0; i < N; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    out.n_value += delta[ii];
    log_closed -= std::log(c[ii] * c[ii] * std::sqrt(delta[ii] * dual[ii]));
  }
  out.det_abs_closed_form = std::exp(log_closed);
  out.det_abs = std::abs(out.S.partialPivLu().determinant());
  return out;
}

double kac_peterson_n_value(int n, int m) {
  const double k = m + n;
  const double alpha = 2 * std::numbers::pi / k;
  double den = 1.0;
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l) {
      const double b = trig_bracket(l - j, alpha);
      den *= b * b;
    }
  return std::pow(2 * std::sin(std::numbers::pi / k), -n * (n - 1)) * n * std::pow(k, n - 1) / den;
}

Expansion structure_constants_verlinde(const Partition& lam, const Partition& mu,
                                       const ModelParams& params) {
  return structure_constants_verlinde(lam, mu, s_matrix(params));
}

Expansion structure_constants_verlinde(const Partition& lam, const Partition& mu,
                                       const SMatrix& sm) {
  require_alcove(lam, sm.params);
  require_alcove(mu, sm.params);
  const std::size_t l = index_of(sm.basis, lam);
  const std::size_t u = index_of(sm.basis, mu);
  const auto N = static_cast<Eigen::Index>(sm.basis.size());
  Expansion out;
  for (Eigen::Index k = 0; k < N; ++k) {
    Complex sum = 0.0;
    for (Eigen::Index v = 0; v < N; ++v)
      sum += sm.S(static_cast<Eigen::Index>(l), v) * sm.S(static_cast<Eigen::Index>(u), v) *
             sm.Sinv(v, k) / sm.S(0, v);
    out[sm.basis[static_cast<std::size_t>(k)]] = real_part_checked(sum);
  }
  return out;
}

Expansion structure_constants_projection(const Partition& lam, const Partition& mu,
                                         const ModelParams& params) {
  require_alcove(lam, params);
  require_alcove(mu, params);
  const SpectrumResult& spec = cached_spectrum(params);
  auto& cc = EigenpolynomialTable::shared(params)->coeffs();
  const Eigen::MatrixXcd V = polynomial_values(spec);
  const auto l = static_cast<Eigen::Index>(index_of(spec.basis, lam));
  const auto u = static_cast<Eigen::Index>(index_of(spec.basis, mu));
  Expansion out;
  for (std::size_t k = 0; k < spec.basis.size(); ++k) {
    const auto ki = static_cast<Eigen::Index>(k);
    Complex sum = 0.0;
    for (std::size_t v = 0; v < spec.points.size(); ++v) {
      const auto vi = static_cast<Eigen::Index>(v);
      sum += V(l, vi) * V(u, vi) * std::conj(V(ki, vi)) * spec.points[v].dual_norm;
    }
    const double c = cc.c_norm(spec.basis[k]);
    out[spec.basis[k]] = real_part_checked(c * c * cc.delta_weight(spec.basis[k]) * sum);
  }
  return out;
}

LrRouteResult structure_constants_lr(const Partition& lam, const Partition& mu,
                                     const ModelParams& params) {
  require_alcove(lam, params);
  require_alcove(mu, params);
  LrRouteResult out;
  try {
    out.value = reduce_mod_ideal(lr_coefficients(lam, mu, params), params);
  } catch (const SingularDenominator&) {
    out.limit_used = true;
    LimitEstimate est = limit_in_g(params, [&](const ModelParams& p) {
      return reduce_mod_ideal(lr_coefficients(lam, mu, p), p);
    });
    out.value = std::move(est.value);
    out.flagged = std::move(est.flagged);
  }
  return out;
}

std::string to_string(Route r) { return r == Route::Verlinde ? "verlinde" : "lr"; }

double FusionTable::get(const Partition& lam, const Partition& mu, const Partition& kappa) const {
  auto it = N.find({lam, mu, kappa});
  return it == N.end() ? 0.0 : it->second;
}

FusionTable fusion_table(const ModelParams& params, Route route) {
  FusionTable t;
  t.params = params;
  t.method = route;
  t.basis = enumerate_level(params.n, params.m);
  std::optional<SMatrix> sm;
  if (route == Route::Verlinde) sm = s_matrix(params);
  for (const auto& lam : t.basis) {
    for (const auto& mu : t.basis) {
      Expansion row;
      if (route == Route::Verlinde) {
        row = structure_constants_verlinde(lam, mu, *sm);
      } else {
        LrRouteResult r = structure_constants_lr(lam, mu, params);
        for (const auto& k : r.flagged) t.flagged.emplace_back(lam, mu, k);
        row = std::move(r.value);
      }
      for (const auto& [kappa, v] : row)
        if (std::abs(v) > 1e-12) t.N[{lam, mu, kappa}] = v;
    }
  }
  return t;
}

double max_difference(const FusionTable& a, const FusionTable& b) {
  std::set<std::tuple<Partition, Partition, Partition>> keys;
  for (const auto& [k, v] : a.N) keys.insert(k);
  for (const auto& [k, v] : b.N) keys.insert(k);
  double d = 0.0;
  for (const auto& [l, m, k] : keys) d = std::max(d, std::abs(a.get(l, m, k) - b.get(l, m, k)));
  return d;
}

}  // namespace ellrs
