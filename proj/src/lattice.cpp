#include "ellrs/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "ellrs/errors.hpp"

namespace ellrs {

Complex LatticeFunction::at(const Partition& lam) const {
  auto it = values.find(lam);
  return it == values.end() ? Complex{} : it->second;
}

void LatticeFunction::set(const Partition& lam, Complex v) {
  if (lam.n() != n) throw InvalidArgument("lattice function arity mismatch");
  if (v == Complex{})
    values.erase(lam);
  else
    values[lam] = v;
}

Complex apply_D(int r, const LatticeFunction& f, const Partition& lam, const ModelParams& params) {
  if (r < 1 || r > lam.n()) throw InvalidArgument("apply_D: r out of range");
  Complex sum = 0.0;
  for (const auto& nu : vertical_strips(lam, r)) {
    const Complex v = f.at(nu);
    if (v != Complex{}) sum += hop_B(lam, nu, params) * v;
  }
  return sum;
}

LatticeFunction apply_D(int r, const LatticeFunction& f, const ModelParams& params) {
  std::set<Partition> image;
  for (const auto& [nu, v] : f.values)
    for (auto& lam : vertical_strips_below(nu, r)) image.insert(std::move(lam));
  LatticeFunction out(f.n);
  for (const auto& lam : image) out.set(lam, apply_D(r, f, lam, params));
  return out;
}

TruncatedOperator build_truncated(int r, const ModelParams& params) {
  if (!params.level_locked) throw InvalidArgument("truncated operators need level-locked parameters");
  const int n = params.n;
  if (r < 1 || r >= n) throw InvalidArgument("build_truncated: r must satisfy 1 <= r < n");
  TruncatedOperator op;
  op.r = r;
  op.params = params;
  op.basis = enumerate_level(n, params.m);
  const auto N = static_cast<Eigen::Index>(op.basis.size());
  std::unordered_map<Partition, Eigen::Index, PartitionHash> index;
  for (Eigen::Index i = 0; i < N; ++i) index.emplace(op.basis[static_cast<std::size_t>(i)], i);
  op.matrix = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const Partition& lam = op.basis[static_cast<std::size_t>(i)];
    for (const auto& nu : vertical_strips(lam, r)) {
      if (nu.span() > params.m) continue;
      op.matrix(i, index.at(underline(nu))) += hop_B(lam, nu, params);
    }
  }
  return op;
}

namespace {

Eigen::VectorXd sqrt_delta(const std::vector<Partition>& basis, const ModelParams& params) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double d = delta_weight(basis[i], params);
    if (!(d > 0)) throw InvalidArgument("orthogonality weight is not positive at " + basis[i].str());
    w(static_cast<Eigen::Index>(i)) = std::sqrt(d);
  }
  return w;
}

Eigen::MatrixXd symmetrized(const TruncatedOperator& op, const Eigen::VectorXd& w) {
  return w.asDiagonal() * op.matrix * w.cwiseInverse().asDiagonal();
}

}  // namespace

double normality_defect(const TruncatedOperator& op) {
  const Eigen::MatrixXd M = symmetrized(op, sqrt_delta(op.basis, op.params));
  const double norm2 = M.squaredNorm();
  if (norm2 == 0.0) return 0.0;
  return (M * M.transpose() - M.transpose() * M).norm() / norm2;
}

SpectralEvaluation closed_form_spectrum(const Partition& nu, const ModelParams& params) {
  const int n = params.n;
  const double g = params.g;
  auto qpow = [&](double x) { return std::polar(1.0, params.alpha * x); };
  std::vector<Complex> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = qpow(nu[j] + (n - 1 - j) * g);
  SpectralEvaluation e = elementary_symmetric(x);
  const double shift = nu.weight() / static_cast<double>(n) + (n - 1) * g / 2;
  for (int r = 1; r < n; ++r) e[static_cast<std::size_t>(r - 1)] *= qpow(-r * shift);
  e[static_cast<std::size_t>(n - 1)] = 1.0;
  return e;
}

const SpectralPoint& SpectrumResult::at(const Partition& label) const {
  for (const auto& pt : points)
    if (pt.label == label) return pt;
  throw InvalidArgument("no spectral point labelled " + label.str());
}

namespace {

// Unlabelled joint eigen-data at one parameter point.
struct RawSpectrum {
  std::vector<SpectralEvaluation> e;
  std::vector<std::vector<Complex>> vectors;
};

RawSpectrum diagonalize(const ModelParams& params, const std::vector<Partition>& basis,
                        std::mt19937_64& rng) {
  const int n = params.n;
  const auto N = static_cast<Eigen::Index>(basis.size());
  const Eigen::VectorXd w = sqrt_delta(basis, params);
  std::vector<Eigen::MatrixXcd> M;
  for (int r = 1; r < n; ++r) M.push_back(symmetrized(build_truncated(r, params), w).cast<Complex>());

  std::uniform_real_distribution<double> coef(0.5, 1.5);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  bool simple = false;
  for (int attempt = 0; attempt < 8 && !simple; ++attempt) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
    for (auto& Mr : M) A += coef(rng) * Mr;
    solver.compute(A);
    if (solver.info() != Eigen::Success) continue;
    const auto& ev = solver.eigenvalues();
    const double scale = std::max(1.0, A.norm());
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = i + 1; j < N; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
    simple = gap > 1e-8 * scale;
  }
  if (!simple) throw DegenerateCombination("no random combination with simple spectrum found");

  RawSpectrum out;
  const Eigen::MatrixXcd& U = solver.eigenvectors();
  for (Eigen::Index k = 0; k < N; ++k) {
    const Eigen::VectorXcd u = U.col(k);
    const Complex uu = u.squaredNorm();
    SpectralEvaluation e(static_cast<std::size_t>(n), 1.0);
    for (int r = 1; r < n; ++r) {
      const Complex rq = u.dot(M[static_cast<std::size_t>(r - 1)] * u) / uu;
      e[static_cast<std::size_t>(r - 1)] = rq;
    }
    Eigen::VectorXcd v = w.cwiseInverse().cast<Complex>().asDiagonal() * u;
    if (std::abs(v(0)) < 1e-14 * v.norm())
      throw NonConvergent("eigenvector vanishes at the zero partition");
    v /= v(0);
    out.e.push_back(std::move(e));
    out.vectors.emplace_back(v.data(), v.data() + v.size());
  }
  return out;
}

double distance(const SpectralEvaluation& a, const SpectralEvaluation& b) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

double min_gap(const std::vector<SpectralEvaluation>& pts) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) gap = std::min(gap, distance(pts[i], pts[j]));
  return gap;
}

// perm[i] = index in `next` nearest to prev[i]; nullopt unless that is a
// bijection with every move below `limit`.
std::optional<std::vector<std::size_t>> match(const std::vector<SpectralEvaluation>& prev,
                                              const std::vector<SpectralEvaluation>& next,
                                              double limit, double* max_move) {
  std::vector<std::size_t> perm(prev.size());
  std::vector<bool> used(next.size(), false);
  *max_move = 0.0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < next.size(); ++j) {
      const double d = distance(prev[i], next[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    *max_move = std::max(*max_move, bd);
    if (used[best] || !(bd < limit)) return std::nullopt;
    used[best] = true;
    perm[i] = best;
  }
  return perm;
}

}  // namespace

SpectrumResult joint_spectrum(const ModelParams& params, std::uint64_t seed) {
  if (!params.level_locked) throw InvalidArgument("joint spectrum needs level-locked parameters");
  if (params.n < 2) throw InvalidArgument("joint spectrum needs n >= 2");
  SpectrumResult res;
  res.params = params;
  res.seed = seed;
  res.basis = enumerate_level(params.n, params.m);
  const std::size_t N = res.basis.size();
  std::mt19937_64 rng(seed);

  // Labels at p = 0 from the closed form.
  RawSpectrum raw = diagonalize(params.with_p(0.0), res.basis, rng);
  std::vector<SpectralEvaluation> reference;
  for (const auto& nu : res.basis) reference.push_back(closed_form_spectrum(nu, params));
  double move = 0.0;
  const double ref_gap = N > 1 ? min_gap(reference) : 1.0;
  auto perm = match(reference, raw.e, ref_gap / 2, &move);
  if (!perm) throw TrackingAmbiguity("p = 0 spectrum does not match the closed form");

  std::vector<SpectralEvaluation> current(N);
  std::vector<std::vector<Complex>> vectors(N);
  for (std::size_t i = 0; i < N; ++i) {
    current[i] = raw.e[(*perm)[i]];
    vectors[i] = raw.vectors[(*perm)[i]];
  }

  const double target = params.p;
  double p_cur = 0.0;
  double step = 0.05;
  while (p_cur != target) {
    const double remaining = target - p_cur;
    const double p_next =
        std::abs(remaining) <= step * (1 + 1e-9) ? target : p_cur + std::copysign(step, remaining);
    RawSpectrum next = diagonalize(params.with_p(p_next), res.basis, rng);
    HomotopyStep log{p_cur, p_next, N > 1 ? min_gap(current) : 1.0, 0.0, false};
    auto pm = match(current, next.e, log.min_gap / 2, &log.max_move);
    if (!pm) {
      res.steps.push_back(log);
      step /= 2;
      if (step < 1e-4) throw TrackingAmbiguity("continuation step fell below 1e-4 at p = " + std::to_string(p_cur));
      continue;
    }
    log.accepted = true;
    res.steps.push_back(log);
    for (std::size_t i = 0; i < N; ++i) {
      current[i] = next.e[(*pm)[i]];
      vectors[i] = next.vectors[(*pm)[i]];
    }
    p_cur = p_next;
  }

  for (std::size_t i = 0; i < N; ++i) {
    SpectralPoint pt;
    pt.label = res.basis[i];
    pt.e = current[i];
    pt.eigenvector = vectors[i];
    double norm = 0.0;
    for (std::size_t k = 0; k < N; ++k) norm += std::norm(vectors[i][k]) * delta_weight(res.basis[k], params);
    pt.dual_norm = 1.0 / norm;
    res.points.push_back(std::move(pt));
  }
  return res;
}

const SpectrumResult& cached_spectrum(const ModelParams& params) {
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, std::unique_ptr<SpectrumResult>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[params.fingerprint()];
  if (!slot) slot = std::make_unique<SpectrumResult>(joint_spectrum(params));
  return *slot;
}

OrthogonalityDeviation dual_orthogonality_check(const SpectrumResult& spectrum) {
  auto table = EigenpolynomialTable::shared(spectrum.params);
  const auto& basis = spectrum.basis;
  const std::size_t N = basis.size();
  std::vector<std::vector<Complex>> values(N);
  for (std::size_t l = 0; l < N; ++l)
    for (const auto& pt : spectrum.points) values[l].push_back(evaluate(table->get(basis[l]), pt.e));

  OrthogonalityDeviation dev;
  for (std::size_t l = 0; l < N; ++l) {
    for (std::size_t k = l; k < N; ++k) {
      Complex ip = 0.0;
      for (std::size_t v = 0; v < N; ++v)
        ip += values[l][v] * std::conj(values[k][v]) * spectrum.points[v].dual_norm;
      if (l == k) {
        const double c = table->coeffs().c_norm(basis[l]);
        const double expected = 1.0 / (c * c * table->coeffs().delta_weight(basis[l]));
        dev.diagonal_relative = std::max(dev.diagonal_relative, std::abs(ip - expected) / expected);
      } else {
        dev.off_diagonal = std::max(dev.off_diagonal, std::abs(ip));
      }
    }
  }
  return dev;
}

}  // namespace ellrs
