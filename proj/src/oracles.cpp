#include "ellrs/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>

#include "ellrs/errors.hpp"
#include "ellrs/fusion.hpp"
#include "ellrs/lattice.hpp"

namespace ellrs::oracle {

namespace {

struct TableauFiller {
  std::vector<int> rows;
  const std::vector<Complex>& x;
  std::vector<std::vector<int>> t;
  Complex total = 0.0;

  void fill(std::size_t i, std::size_t j, Complex acc) {
    if (i == rows.size()) {
      total += acc;
      return;
    }
    if (j == static_cast<std::size_t>(rows[i])) {
      fill(i + 1, 0, acc);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= static_cast<int>(x.size()); ++v) {
      t[i][j] = v;
      fill(i, j + 1, acc * x[static_cast<std::size_t>(v - 1)]);
    }
  }
};

}  // namespace

Complex schur_eval(const Partition& mu, const std::vector<Complex>& x) {
  std::vector<int> rows;
  for (int part : mu.parts())
    if (part > 0) rows.push_back(part);
  if (rows.size() > x.size()) return 0.0;
  TableauFiller f{rows, x, {}, 0.0};
  for (int len : rows) f.t.emplace_back(static_cast<std::size_t>(len), 0);
  f.fill(0, 0, 1.0);
  return f.total;
}

namespace {

PolynomialInE e_k(int n, int k) {
  if (k == 0) return PolynomialInE::constant(n, 1.0);
  if (k < 0 || k > n) return PolynomialInE(n);
  return PolynomialInE::monomial(Partition::column(n, k));
}

PolynomialInE product(const PolynomialInE& a, const PolynomialInE& b) {
  PolynomialInE out(a.n());
  for (const auto& [kb, cb] : b.terms())
    for (const auto& [ka, ca] : a.terms()) {
      PolynomialInE t = PolynomialInE::monomial(ka + kb, ca * cb);
      out.add_scaled(t, 1.0);
    }
  return out;
}

// Laplace expansion along the first row.
PolynomialInE determinant(const std::vector<std::vector<PolynomialInE>>& M, int n) {
  const std::size_t k = M.size();
  if (k == 0) return PolynomialInE::constant(n, 1.0);
  PolynomialInE out(n);
  for (std::size_t col = 0; col < k; ++col) {
    if (M[0][col].empty()) continue;
    std::vector<std::vector<PolynomialInE>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<PolynomialInE> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != col) row.push_back(M[i][j]);
      minor.push_back(std::move(row));
    }
    out.add_scaled(product(M[0][col], determinant(minor, n)), col % 2 == 0 ? 1.0 : -1.0);
  }
  return out;
}

}  // namespace

PolynomialInE schur_in_e(const Partition& mu) {
  const int n = mu.n();
  // Conjugate partition.
  std::vector<int> conj(static_cast<std::size_t>(mu.n() > 0 ? mu[0] : 0), 0);
  for (int part : mu.parts())
    for (int c = 0; c < part; ++c) ++conj[static_cast<std::size_t>(c)];
  const std::size_t k = conj.size();
  std::vector<std::vector<PolynomialInE>> M(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      M[i].push_back(e_k(n, conj[i] - static_cast<int>(i) + static_cast<int>(j)));
  return determinant(M, n);
}

namespace {

double qbracket(double z, double alpha) { return std::sin(alpha * z / 2) / std::sin(alpha / 2); }

double qden(double z, double alpha) {
  const double v = qbracket(z, alpha);
  if (std::abs(v) < 1e-12) throw SingularDenominator("[" + std::to_string(z) + "]_q vanishes");
  return v;
}

}  // namespace

double macdonald_pieri_p0(const Partition& lam, const Partition& nu, double alpha, double g) {
  const int n = lam.n();
  for (int j = 0; j < n; ++j)
    if (nu[j] - lam[j] != 0 && nu[j] - lam[j] != 1) throw NotAStrip(nu.str() + "/" + lam.str());
  double r = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if ((nu[j] - lam[j]) - (nu[k] - lam[k]) != -1) continue;
      const double a = nu[j] - nu[k];
      const double b = lam[j] - lam[k];
      r *= qbracket(a + g * (k - j + 1), alpha) / qden(a + g * (k - j), alpha);
      r *= qbracket(b + g * (k - j - 1), alpha) / qden(b + g * (k - j), alpha);
    }
  }
  return r;
}

namespace {

struct MacdonaldCache {
  double alpha;
  double g;
  std::map<Partition, PolynomialInE> table;

  const PolynomialInE& get(const Partition& mu) {
    if (auto it = table.find(mu); it != table.end()) return it->second;
    const int n = mu.n();
    PolynomialInE P(n);
    if (mu.is_zero()) {
      P = PolynomialInE::constant(n, 1.0);
    } else {
      const int r = r_index(mu);
      std::vector<int> lp = mu.parts();
      for (int j = 0; j < r; ++j) --lp[static_cast<std::size_t>(j)];
      const Partition lam(lp);
      P = get(lam).times_monomial(Partition::column(n, r));
      for (const auto& nu : vertical_strips(lam, r))
        if (nu != mu) P.add_scaled(get(nu), -macdonald_pieri_p0(lam, nu, alpha, g));
      P.set(mu, 1.0);
    }
    return table.emplace(mu, std::move(P)).first->second;
  }
};

}  // namespace

PolynomialInE macdonald_in_e(const Partition& mu, double alpha, double g) {
  MacdonaldCache cache{alpha, g, {}};
  return cache.get(mu);
}

Expansion macdonald_lr(const Partition& lam, const Partition& mu, double alpha, double g) {
  MacdonaldCache cache{alpha, g, {}};
  PolynomialInE F = product(cache.get(lam), cache.get(mu));
  const double scale = F.max_abs();
  Expansion out;
  while (!F.empty()) {
    // The heaviest key that no other key dominates.
    std::optional<Partition> top;
    for (const auto& [k, c] : F.terms()) {
      bool maximal = true;
      for (const auto& [o, oc] : F.terms())
        if (o != k && dominance_leq(k, o)) maximal = false;
      if (maximal && (!top || k.parts() > top->parts())) top = k;
    }
    const double c = F.coeff(*top);
    F.add_scaled(cache.get(*top), -c);
    F.set(*top, 0.0);
    F.drop_below(1e-13 * scale);
    out[*top] += c;
  }
  return out;
}

namespace {

Complex qpow(double alpha, double x) { return std::polar(1.0, alpha * x); }

std::vector<Complex> shifted_point(const Partition& nu, double alpha, double g) {
  const int n = nu.n();
  std::vector<Complex> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = qpow(alpha, nu[j] + (n - 1 - j) * g);
  return x;
}

}  // namespace

Eigen::MatrixXcd kac_peterson_s(int n, int m) {
  const auto basis = enumerate_level(n, m);
  const double alpha = 2 * std::numbers::pi / (m + n);
  const auto N = static_cast<Eigen::Index>(basis.size());
  const std::vector<Complex> rho = shifted_point(Partition::zero(n), alpha, 1.0);
  Eigen::MatrixXcd S(N, N);
  for (Eigen::Index l = 0; l < N; ++l) {
    const auto& lam = basis[static_cast<std::size_t>(l)];
    for (Eigen::Index v = 0; v < N; ++v) {
      const auto& nu = basis[static_cast<std::size_t>(v)];
      const double a = lam.weight();
      const double b = nu.weight();
      const Complex phase = qpow(alpha, -a * b / n - 0.5 * (n - 1) * (a + b));
      S(l, v) = phase * schur_eval(lam, shifted_point(nu, alpha, 1.0)) * schur_eval(nu, rho);
    }
  }
  return S;
}

std::map<Partition, long long> classical_fusion(const Partition& lam, const Partition& mu, int n,
                                                int m) {
  const auto basis = enumerate_level(n, m);
  auto index = [&](const Partition& p) -> Eigen::Index {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == p) return static_cast<Eigen::Index>(i);
    throw InvalidArgument(p.str() + " is not in the level-" + std::to_string(m) + " alcove");
  };
  const Eigen::Index l = index(lam);
  const Eigen::Index u = index(mu);
  const Eigen::MatrixXcd S = kac_peterson_s(n, m);
  const Eigen::MatrixXcd Sinv = S.inverse();
  std::map<Partition, long long> out;
  for (Eigen::Index k = 0; k < S.rows(); ++k) {
    Complex sum = 0.0;
    for (Eigen::Index v = 0; v < S.cols(); ++v) sum += S(l, v) * S(u, v) * Sinv(v, k) / S(0, v);
    const double rounded = std::round(sum.real());
    if (std::abs(sum - Complex(rounded, 0.0)) > 1e-6)
      throw NonIntegral("classical fusion coefficient " + std::to_string(sum.real()));
    if (rounded != 0.0) out[basis[static_cast<std::size_t>(k)]] = static_cast<long long>(rounded);
  }
  return out;
}

double principal_specialization(const Partition& nu, double alpha, double g) {
  const int n = nu.n();
  double r = 1.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const int d = nu[j] - nu[k];
      for (int l = 0; l < d; ++l)
        r *= qbracket((k - j + 1) * g + l, alpha) / qden((k - j) * g + l, alpha);
    }
  return r;
}

OracleReport finish(OracleReport r) {
  const double dev = r.relative ? r.max_rel : r.max_abs;
  r.passed = std::isfinite(dev) && dev <= r.tolerance;
  return r;
}

namespace {

void track(OracleReport& r, Complex got, Complex want) {
  const double a = std::abs(got - want);
  r.max_abs = std::max(r.max_abs, a);
  r.max_rel = std::max(r.max_rel, a / std::max(std::abs(want), 1e-300));
}

// Runs body, converting a library error into a failed report.
template <class F>
OracleReport guarded(OracleReport r, F&& body) {
  try {
    body(r);
    return finish(r);
  } catch (const Error& e) {
    r.note = e.what();
    r.passed = false;
    return r;
  }
}

std::vector<Partition> partitions_up_to(int n, int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto& p : enumerate_weight(n, w)) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<OracleReport> limit_suite(int n, int m) {
  std::vector<OracleReport> reports;
  const double g_generic = 0.7;
  const std::string tag = "n=" + std::to_string(n) + ",m=" + std::to_string(m);

  reports.push_back(guarded({"schur_limit[" + tag + "]", 0, 0, 1e-4, true, false, ""}, [&](OracleReport& r) {
    const double alpha = 2.399827;
    const double d = 1e-6;
    const auto Pp = ModelParams::free(n, 1.0 + d, 0.3, alpha);
    const auto Pm = ModelParams::free(n, 1.0 - d, 0.3, alpha);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& mu : partitions_up_to(n, 4)) {
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Complex> x;
        for (int j = 0; j < n; ++j) x.emplace_back(u(rng), u(rng));
        const Complex got = 0.5 * (evaluate_R(mu, x, Pp) + evaluate_R(mu, x, Pm));
        const Complex want = schur_eval(mu, x);
        const double a = std::abs(got - want);
        r.max_abs = std::max(r.max_abs, a);
        r.max_rel = std::max(r.max_rel, a / std::max(1.0, std::abs(want)));
      }
    }
  }));

  const auto P0 = ModelParams::locked(n, m, g_generic, 0.0);
  reports.push_back(guarded({"pieri_p0[" + tag + "]", 0, 0, 1e-12, true, false, ""}, [&](OracleReport& r) {
    for (const auto& lam : partitions_up_to(n, 4))
      for (int s = 1; s <= n; ++s)
        for (const auto& nu : vertical_strips(lam, s))
          track(r, psi_prime(lam, nu, P0), macdonald_pieri_p0(lam, nu, P0.alpha, P0.g));
  }));

  reports.push_back(guarded({"spectrum_p0[" + tag + "]", 0, 0, 1e-10, false, false, ""}, [&](OracleReport& r) {
    const auto spec = joint_spectrum(P0);
    for (const auto& pt : spec.points) {
      const auto want = closed_form_spectrum(pt.label, P0);
      for (std::size_t i = 0; i < want.size(); ++i) track(r, pt.e[i], want[i]);
    }
  }));

  reports.push_back(guarded({"principal_specialization[" + tag + "]", 0, 0, 1e-9, true, false, ""},
                            [&](OracleReport& r) {
    const double alpha = P0.alpha;
    const std::vector<Complex> x = shifted_point(Partition::zero(n), alpha, P0.g);
    for (const auto& nu : enumerate_level(n, m)) {
      const Complex lhs = qpow(alpha, -0.5 * nu.weight() * (n - 1) * P0.g) * evaluate_R(nu, x, P0);
      track(r, lhs, principal_specialization(nu, alpha, P0.g));
      track(r, lhs, 1.0 / c_norm(nu, P0));
    }
  }));

  const auto G1 = ModelParams::locked(n, m, 1.0, 0.0);
  const auto G1p = ModelParams::locked(n, m, 1.0, 0.5);
  reports.push_back(guarded({"classical_fusion[" + tag + "]", 0, 0, 1e-5, false, false, ""}, [&](OracleReport& r) {
    const FusionTable t = fusion_table(G1, Route::Verlinde);
    for (const auto& lam : t.basis)
      for (const auto& mu : t.basis) {
        const auto want = classical_fusion(lam, mu, n, m);
        for (const auto& kappa : t.basis) {
          auto it = want.find(kappa);
          track(r, t.get(lam, mu, kappa), it == want.end() ? 0.0 : static_cast<double>(it->second));
        }
      }
  }));

  reports.push_back(guarded({"g1_p_independence[" + tag + "]", 0, 0, 1e-9, false, false, ""},
                            [&](OracleReport& r) {
    r.max_abs = max_difference(fusion_table(G1, Route::Verlinde), fusion_table(G1p, Route::Verlinde));
  }));

  reports.push_back(guarded({"refined_pieri[" + tag + "]", 0, 0, 1e-12, false, false, ""}, [&](OracleReport& r) {
    for (const auto& lam : enumerate_level(n, m))
      for (int s = 1; s < n; ++s) {
        Expansion want;
        for (const auto& nu : vertical_strips(lam, s))
          if (nu.span() <= m) want[underline(nu)] += macdonald_pieri_p0(lam, nu, P0.alpha, P0.g);
        const auto got = structure_constants_lr(lam, Partition::column(n, s), P0).value;
        for (const auto& kappa : enumerate_level(n, m)) {
          auto a = got.find(kappa);
          auto b = want.find(kappa);
          track(r, a == got.end() ? 0.0 : a->second, b == want.end() ? 0.0 : b->second);
        }
      }
  }));

  reports.push_back(guarded({"refined_fusion[" + tag + "]", 0, 0, 1e-8, false, false, ""}, [&](OracleReport& r) {
    const FusionTable t = fusion_table(P0, Route::Verlinde);
    for (const auto& lam : t.basis)
      for (const auto& mu : t.basis) {
        const Expansion want = reduce_mod_ideal(macdonald_lr(lam, mu, P0.alpha, P0.g), P0);
        for (const auto& kappa : t.basis) {
          auto b = want.find(kappa);
          track(r, t.get(lam, mu, kappa), b == want.end() ? 0.0 : b->second);
        }
      }
  }));

  reports.push_back(guarded({"kac_peterson_s[" + tag + "]", 0, 0, 1e-8, false, false, ""}, [&](OracleReport& r) {
    const Eigen::MatrixXcd K = kac_peterson_s(n, m);
    for (const auto& params : {G1, G1p}) {
      const SMatrix sm = s_matrix(params);
      for (Eigen::Index v = 0; v < K.cols(); ++v) {
        const auto& nu = sm.basis[static_cast<std::size_t>(v)];
        const double gauge = c_norm(nu, G1) / c_norm(nu, params);
        for (Eigen::Index l = 0; l < K.rows(); ++l) track(r, sm.S(l, v), K(l, v) * gauge);
      }
    }
  }));

  reports.push_back(guarded({"kac_peterson_n_value[" + tag + "]", 0, 0, 1e-8, true, false, ""},
                            [&](OracleReport& r) {
    // n = sum_lam S_{0,lam}^2 in the sine form.
    const Eigen::MatrixXcd K = kac_peterson_s(n, m);
    double n_value = 0.0;
    for (Eigen::Index v = 0; v < K.cols(); ++v) n_value += std::norm(K(0, v));
    track(r, s_matrix(G1).n_value, kac_peterson_n_value(n, m));
    track(r, n_value, kac_peterson_n_value(n, m));
  }));

  return reports;
}

}  // namespace ellrs::oracle
