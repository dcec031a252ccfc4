#include "ellrs/eigenpolynomials.hpp"

#include <algorithm>
#include <cmath>

#include "ellrs/errors.hpp"

namespace ellrs {

PolynomialInE PolynomialInE::constant(int n, double c) {
  PolynomialInE P(n);
  if (c != 0.0) P.terms_.emplace(Partition::zero(n), c);
  return P;
}

PolynomialInE PolynomialInE::monomial(const Partition& key, double c) {
  PolynomialInE P(key.n());
  if (c != 0.0) P.terms_.emplace(key, c);
  return P;
}

double PolynomialInE::coeff(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0.0 : it->second;
}

void PolynomialInE::set(const Partition& key, double value) {
  if (key.n() != n_) throw InvalidArgument("monomial key length mismatch");
  if (value == 0.0)
    terms_.erase(key);
  else
    terms_[key] = value;
}

void PolynomialInE::add_scaled(const PolynomialInE& other, double factor) {
  if (other.n_ != n_) throw InvalidArgument("polynomial arity mismatch");
  if (factor == 0.0) return;
  if (&other == this) {
    const PolynomialInE copy = other;
    add_scaled(copy, factor);
    return;
  }
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(key, factor * c);
    if (!inserted) {
      it->second += factor * c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
}

PolynomialInE PolynomialInE::times_monomial(const Partition& key) const {
  PolynomialInE out(n_);
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + key, c);
  return out;
}

double PolynomialInE::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void PolynomialInE::prune(double rel) { drop_below(rel * max_abs()); }

void PolynomialInE::drop_below(double cut) {
  std::erase_if(terms_, [cut](const auto& kv) { return std::abs(kv.second) < cut; });
}

namespace {

// Powers e_j^k for k up to the largest exponent appearing in P.
std::vector<std::vector<Complex>> power_table(const PolynomialInE& P, const SpectralEvaluation& e) {
  const int n = P.n();
  std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
  for (const auto& [key, c] : P.terms()) {
    for (int j = 0; j < n; ++j) {
      const int next = (j + 1 < n) ? key[j + 1] : 0;
      max_exp[static_cast<std::size_t>(j)] = std::max(max_exp[static_cast<std::size_t>(j)], key[j] - next);
    }
  }
  std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& row = pw[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(max_exp[static_cast<std::size_t>(j)] + 1));
    row[0] = 1.0;
    for (std::size_t k = 1; k < row.size(); ++k) row[k] = row[k - 1] * e[static_cast<std::size_t>(j)];
  }
  return pw;
}

Complex monomial_value(const Partition& key, const std::vector<std::vector<Complex>>& pw) {
  const int n = key.n();
  Complex v = 1.0;
  for (int j = 0; j < n; ++j) {
    const int next = (j + 1 < n) ? key[j + 1] : 0;
    v *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(key[j] - next)];
  }
  return v;
}

}  // namespace

Complex evaluate(const PolynomialInE& P, const SpectralEvaluation& e) {
  if (static_cast<int>(e.size()) != P.n()) throw InvalidArgument("evaluation point has wrong length");
  const auto pw = power_table(P, e);
  Complex sum = 0.0;
  for (const auto& [key, c] : P.terms()) sum += c * monomial_value(key, pw);
  return sum;
}

double evaluation_scale(const PolynomialInE& P, const SpectralEvaluation& e) {
  if (static_cast<int>(e.size()) != P.n()) throw InvalidArgument("evaluation point has wrong length");
  const auto pw = power_table(P, e);
  double sum = 0.0;
  for (const auto& [key, c] : P.terms()) sum += std::abs(c) * std::abs(monomial_value(key, pw));
  return sum;
}

SpectralEvaluation elementary_symmetric(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  std::vector<Complex> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = i + 1; r >= 1; --r) e[r] += e[r - 1] * x[i];
  }
  return SpectralEvaluation(e.begin() + 1, e.end());
}

EigenpolynomialTable::EigenpolynomialTable(const ModelParams& params)
    : params_(params), coeffs_(params) {}

std::shared_ptr<EigenpolynomialTable> EigenpolynomialTable::shared(const ModelParams& params) {
  static std::mutex registry_mutex;
  static std::unordered_map<std::uint64_t, std::shared_ptr<EigenpolynomialTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[params.fingerprint()];
  if (!slot) slot = std::make_shared<EigenpolynomialTable>(params);
  return slot;
}

std::vector<Partition> EigenpolynomialTable::dependencies(const Partition& mu) const {
  if (mu.is_zero()) return {};
  const int r = r_index(mu);
  std::vector<int> lam_parts(mu.parts());
  for (int j = 0; j < r; ++j) lam_parts[static_cast<std::size_t>(j)] -= 1;
  Partition lam(std::move(lam_parts));
  std::vector<Partition> deps{lam};
  for (auto& nu : vertical_strips(lam, r))
    if (nu != mu) deps.push_back(std::move(nu));
  return deps;
}

PolynomialInE EigenpolynomialTable::compute(const Partition& mu) {
  const int n = mu.n();
  if (mu.is_zero()) return PolynomialInE::constant(n, 1.0);
  const int r = r_index(mu);
  const auto deps = dependencies(mu);
  const Partition& lam = deps.front();
  PolynomialInE P = table_.at(lam).times_monomial(Partition::column(n, r));
  for (std::size_t i = 1; i < deps.size(); ++i) {
    const Partition& nu = deps[i];
    P.add_scaled(table_.at(nu), -coeffs_.psi_prime(lam, nu));
  }
  P.prune();
  // Leading coefficient is 1 by construction; pin it against roundoff.
  P.set(mu, 1.0);
  return P;
}

const PolynomialInE& EigenpolynomialTable::get(const Partition& mu) {
  if (mu.n() != params_.n) throw InvalidArgument("partition length does not match n");
  std::lock_guard lock(mutex_);
  if (auto it = table_.find(mu); it != table_.end()) return it->second;

  std::vector<Partition> stack{mu};
  while (!stack.empty()) {
    const Partition top = stack.back();
    if (table_.contains(top)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (auto& dep : dependencies(top)) {
      if (!table_.contains(dep)) {
        stack.push_back(std::move(dep));
        ready = false;
      }
    }
    if (!ready) continue;
    table_.emplace(top, compute(top));
    stack.pop_back();
  }
  return table_.at(mu);
}

PolynomialInE build_P(const Partition& mu, const ModelParams& params) {
  return EigenpolynomialTable::shared(params)->get(mu);
}

Complex normalized_p(const Partition& mu, const SpectralEvaluation& e, const ModelParams& params) {
  auto table = EigenpolynomialTable::shared(params);
  return table->coeffs().c_norm(mu) * evaluate(table->get(mu), e);
}

Complex evaluate_R(const Partition& mu, const std::vector<Complex>& x, const ModelParams& params) {
  if (static_cast<int>(x.size()) != mu.n()) throw InvalidArgument("x must have length n");
  return evaluate(build_P(mu, params), elementary_symmetric(x));
}

}  // namespace ellrs
