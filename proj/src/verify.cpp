#include "ellrs/verify.hpp"

#include <cmath>
#include <cstdio>

#include "ellrs/errors.hpp"
#include "ellrs/fusion.hpp"
#include "ellrs/lattice.hpp"

namespace ellrs {

namespace {

struct GridPoint {
  double g;
  double p;
};

constexpr GridPoint kGrid[] = {{0.7, 0.0}, {0.7, 0.4}, {1.3, 0.0}, {1.3, 0.4}};

std::string label(const char* what, const ModelParams& P) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s[n=%d,m=%d,g=%g,p=%g]", what, P.n, P.m, P.g, P.p);
  return buf;
}

template <class F>
OracleReport check(const std::string& id, double tol, bool relative, F&& body) {
  OracleReport r{id, 0, 0, tol, relative, false, ""};
  try {
    body(r);
    return oracle::finish(r);
  } catch (const Error& e) {
    r.note = e.what();
    r.passed = false;
    return r;
  }
}

void bump(OracleReport& r, double abs_dev, double scale) {
  r.max_abs = std::max(r.max_abs, abs_dev);
  r.max_rel = std::max(r.max_rel, abs_dev / std::max(scale, 1e-300));
}

double expansion_at(const Expansion& e, const Partition& k) {
  auto it = e.find(k);
  return it == e.end() ? 0.0 : it->second;
}

}  // namespace

std::vector<OracleReport> spectrum_suite(int n, int m) {
  std::vector<OracleReport> out;
  for (const auto& gp : kGrid) {
    const auto P = ModelParams::locked(n, m, gp.g, gp.p);

    out.push_back(check(label("commutator", P), 1e-9, true, [&](OracleReport& r) {
      std::vector<TruncatedOperator> ops;
      for (int s = 1; s < n; ++s) ops.push_back(build_truncated(s, P));
      for (std::size_t a = 0; a < ops.size(); ++a)
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
          const auto& A = ops[a].matrix;
          const auto& B = ops[b].matrix;
          bump(r, (A * B - B * A).norm(), A.norm() * B.norm());
        }
    }));

    out.push_back(check(label("normality", P), 1e-9, false, [&](OracleReport& r) {
      for (int s = 1; s < n; ++s) r.max_abs = std::max(r.max_abs, normality_defect(build_truncated(s, P)));
    }));

    const SpectrumResult& spec = cached_spectrum(P);
    out.push_back(check(label("spectrum_count", P), 0.0, false, [&](OracleReport& r) {
      r.max_abs = std::abs(static_cast<double>(spec.points.size()) - static_cast<double>(binomial(n - 1 + m, m)));
    }));

    out.push_back(check(label("eigenvector_consistency", P), 1e-8, true, [&](OracleReport& r) {
      for (const auto& pt : spec.points)
        for (std::size_t k = 0; k < spec.basis.size(); ++k) {
          const Complex want = normalized_p(spec.basis[k], pt.e, P);
          bump(r, std::abs(pt.eigenvector[k] - want), std::max(1.0, std::abs(want)));
        }
    }));

    out.push_back(check(label("spectral_variety", P), 1e-7, true, [&](OracleReport& r) {
      auto table = EigenpolynomialTable::shared(P);
      for (const auto& mu : enumerate_level(n, m + 1)) {
        if (mu.span() != m + 1) continue;
        const auto& poly = table->get(mu);
        for (const auto& pt : spec.points)
          bump(r, std::abs(evaluate(poly, pt.e)), std::max(evaluation_scale(poly, pt.e), poly.max_abs()));
      }
    }));

    out.push_back(check(label("dual_orthogonality", P), 1e-8, false, [&](OracleReport& r) {
      r.max_abs = dual_orthogonality_check(spec).max();
    }));
  }
  return out;
}

std::vector<OracleReport> ring_suite(int n, int m) {
  std::vector<OracleReport> out;
  for (const auto& gp : kGrid) {
    const auto P = ModelParams::locked(n, m, gp.g, gp.p);
    const auto basis = enumerate_level(n, m);
    const SMatrix sm = s_matrix(P);

    out.push_back(check(label("s_inverse", P), 1e-8, false, [&](OracleReport& r) {
      const Eigen::MatrixXcd I = sm.S * sm.Sinv;
      r.max_abs = (I - Eigen::MatrixXcd::Identity(I.rows(), I.cols())).cwiseAbs().maxCoeff();
    }));

    out.push_back(check(label("det_closed_form", P), 1e-6, true, [&](OracleReport& r) {
      bump(r, std::abs(sm.det_abs - sm.det_abs_closed_form), sm.det_abs_closed_form);
    }));

    out.push_back(check(label("verlinde_vs_projection", P), 1e-8, false, [&](OracleReport& r) {
      for (const auto& lam : basis)
        for (const auto& mu : basis) {
          const auto a = structure_constants_verlinde(lam, mu, sm);
          const auto b = structure_constants_projection(lam, mu, P);
          for (const auto& k : basis) bump(r, std::abs(expansion_at(a, k) - expansion_at(b, k)), 1.0);
        }
    }));

    const FusionTable tv = fusion_table(P, Route::Verlinde);
    out.push_back(check(label("route_agreement", P), 1e-7, false, [&](OracleReport& r) {
      r.max_abs = max_difference(tv, fusion_table(P, Route::LR));
    }));

    out.push_back(check(label("ring_axioms", P), 1e-8, false, [&](OracleReport& r) {
      const Partition zero = Partition::zero(n);
      for (const auto& a : basis)
        for (const auto& b : basis)
          for (const auto& k : basis) {
            bump(r, std::abs(tv.get(a, b, k) - tv.get(b, a, k)), 1.0);
            if (a == zero) bump(r, std::abs(tv.get(a, b, k) - (b == k ? 1.0 : 0.0)), 1.0);
          }
      for (const auto& a : basis)
        for (const auto& b : basis)
          for (const auto& c : basis)
            for (const auto& d : basis) {
              double lhs = 0.0, rhs = 0.0;
              for (const auto& k : basis) {
                lhs += tv.get(a, b, k) * tv.get(k, c, d);
                rhs += tv.get(b, c, k) * tv.get(a, k, d);
              }
              bump(r, std::abs(lhs - rhs), 1.0);
            }
    }));
  }

  const auto F = ModelParams::free(n, 0.7, 0.3, 2.399827);
  std::vector<Partition> small;
  for (int w = 0; w <= 3; ++w)
    for (auto& p : enumerate_weight(n, w)) small.push_back(std::move(p));

  out.push_back(check("lr_support[n=" + std::to_string(n) + "]", 0.0, false, [&](OracleReport& r) {
    for (const auto& lam : small)
      for (const auto& mu : small)
        for (const auto& [nu, c] : lr_coefficients(lam, mu, F))
          if (!lr_support_allowed(lam, mu, nu)) r.max_abs = std::max(r.max_abs, std::abs(c) + 1.0);
  }));

  out.push_back(check("lr_commutativity[n=" + std::to_string(n) + "]", 1e-10, true, [&](OracleReport& r) {
    for (const auto& lam : small)
      for (const auto& mu : small) {
        const auto a = lr_coefficients(lam, mu, F);
        const auto b = lr_coefficients(mu, lam, F);
        for (const auto& [k, v] : a) bump(r, std::abs(v - expansion_at(b, k)), std::max(1.0, std::abs(v)));
        for (const auto& [k, v] : b) bump(r, std::abs(v - expansion_at(a, k)), std::max(1.0, std::abs(v)));
      }
  }));

  out.push_back(check("lr_associativity[n=" + std::to_string(n) + "]", 1e-9, true, [&](OracleReport& r) {
    std::vector<Partition> tiny;
    for (const auto& p : small)
      if (p.weight() <= 2) tiny.push_back(p);
    for (const auto& a : tiny)
      for (const auto& b : tiny)
        for (const auto& c : tiny) {
          Expansion lhs, rhs;
          for (const auto& [k, v] : lr_coefficients(a, b, F))
            for (const auto& [nu, w] : lr_coefficients(k, c, F)) lhs[nu] += v * w;
          for (const auto& [k, v] : lr_coefficients(b, c, F))
            for (const auto& [nu, w] : lr_coefficients(a, k, F)) rhs[nu] += v * w;
          for (const auto& [k, v] : lhs) bump(r, std::abs(v - expansion_at(rhs, k)), std::max(1.0, std::abs(v)));
          for (const auto& [k, v] : rhs) bump(r, std::abs(v - expansion_at(lhs, k)), std::max(1.0, std::abs(v)));
        }
  }));
  return out;
}

std::vector<OracleReport> run_suite(const std::string& suite, int n, int m) {
  if (suite == "limits") return oracle::limit_suite(n, m);
  if (suite == "ring") return ring_suite(n, m);
  if (suite == "spectrum") return spectrum_suite(n, m);
  if (suite == "all") {
    auto out = oracle::limit_suite(n, m);
    for (auto& r : ring_suite(n, m)) out.push_back(std::move(r));
    for (auto& r : spectrum_suite(n, m)) out.push_back(std::move(r));
    return out;
  }
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace ellrs
