#include "ellrs/kernel.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "ellrs/errors.hpp"

namespace ellrs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 100000;

void require_nome(double p) {
  if (!(std::abs(p) < 1.0) || !std::isfinite(p))
    throw NonConvergent("theta series requires |p| < 1, got p = " + std::to_string(p));
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + " must be finite");
}

template <class Real>
constexpr Real series_tol() {
  return std::numeric_limits<Real>::epsilon() < 1e-16 ? Real(1e-19) : Real(1e-16);
}

// Reduced series 2 sum_l (-1)^l p^{l(l+1)} sin((2l+1) z) = theta_1(z;p) / p^{1/4}.
// l(l+1) is even, so the coefficients are real and positive in |p| for
// either sign of p.
template <class Real, class Z>
Z reduced_theta(Z z, Real p) {
  using std::abs;
  using std::exp;
  using std::sin;
  const Real ap = abs(p);
  const Real im = abs(std::imag(Z(z)));
  Z sum = Z(0);
  Real coef = 1;  // p^{l(l+1)}
  for (int l = 0; l < kMaxTerms; ++l) {
    const Real sign = (l % 2 == 0) ? Real(1) : Real(-1);
    sum += Real(2) * sign * coef * sin(Real(2 * l + 1) * z);
    // Envelope of the next term, |sin w| <= cosh(Im w) <= exp(|Im w|).
    const Real next_coef = coef * std::pow(ap, Real(2 * (l + 1)));
    const Real bound = Real(2) * next_coef * exp(Real(2 * l + 3) * im);
    const Real scale = std::max<Real>(abs(sum), std::numeric_limits<Real>::min());
    if (bound < series_tol<Real>() * scale || next_coef == Real(0)) return sum;
    coef = next_coef;
  }
  throw NonConvergent("theta series did not converge");
}

// d/dz of the reduced series at 0: 2 sum_l (-1)^l p^{l(l+1)} (2l+1).
template <class Real>
Real reduced_theta_prime0(Real p) {
  const Real ap = std::abs(p);
  Real sum = 0;
  Real coef = 1;
  for (int l = 0; l < kMaxTerms; ++l) {
    const Real sign = (l % 2 == 0) ? Real(1) : Real(-1);
    sum += Real(2) * sign * coef * Real(2 * l + 1);
    const Real next_coef = coef * std::pow(ap, Real(2 * (l + 1)));
    if (Real(2) * next_coef * Real(2 * l + 3) < series_tol<Real>() * std::abs(sum) ||
        next_coef == Real(0))
      return sum;
    coef = next_coef;
  }
  throw NonConvergent("theta' series did not converge");
}

Complex quarter_power(double p) {
  if (p >= 0) return Complex(std::pow(p, 0.25), 0.0);
  return std::pow(-p, 0.25) * std::exp(Complex(0.0, kPi / 4));
}

template <class Real, class Z>
Z bracket_impl(Z z, Real p, Real alpha) {
  const Real half = alpha / Real(2);
  return reduced_theta<Real>(Z(half) * z, p) / (half * reduced_theta_prime0<Real>(p));
}

}  // namespace

std::string to_string(Precision p) {
  return p == Precision::Double ? "double" : "extended";
}

Precision precision_from_string(const std::string& s) {
  if (s == "double") return Precision::Double;
  if (s == "extended") return Precision::Extended;
  throw InvalidArgument("unknown precision '" + s + "' (expected double|extended)");
}

ModelParams ModelParams::locked(int n, int m, double g, double p, Precision prec) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (m < 0) throw InvalidArgument("m must be >= 0");
  require_finite(g, "g");
  require_finite(p, "p");
  if (!(g > 0)) throw InvalidArgument("level-locked mode requires g > 0");
  require_nome(p);
  ModelParams mp;
  mp.n = n;
  mp.m = m;
  mp.g = g;
  mp.p = p;
  mp.alpha = 2 * kPi / (m + n * g);
  mp.level_locked = true;
  mp.precision = prec;
  return mp;
}

ModelParams ModelParams::free(int n, double g, double p, double alpha, Precision prec,
                              int m) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (m < 0) throw InvalidArgument("m must be >= 0");
  require_finite(g, "g");
  require_finite(p, "p");
  require_finite(alpha, "alpha");
  if (!(alpha > 0)) throw InvalidArgument("alpha must be > 0");
  require_nome(p);
  check_genericity(n, g, alpha);
  ModelParams mp;
  mp.n = n;
  mp.m = m;
  mp.g = g;
  mp.p = p;
  mp.alpha = alpha;
  mp.level_locked = false;
  mp.precision = prec;
  return mp;
}

double ModelParams::period() const { return 2 * kPi / alpha; }

Complex ModelParams::q() const { return std::exp(Complex(0.0, alpha)); }

ModelParams ModelParams::with_g(double g_new) const {
  return level_locked ? locked(n, m, g_new, p, precision)
                      : free(n, g_new, p, alpha, precision, m);
}

ModelParams ModelParams::with_p(double p_new) const {
  ModelParams mp = *this;
  require_nome(p_new);
  mp.p = p_new;
  return mp;
}

std::uint64_t ModelParams::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  };
  mix(static_cast<std::uint64_t>(n));
  mix(static_cast<std::uint64_t>(m));
  mix(std::bit_cast<std::uint64_t>(g));
  mix(std::bit_cast<std::uint64_t>(p));
  mix(std::bit_cast<std::uint64_t>(alpha));
  mix(level_locked ? 1 : 0);
  mix(precision == Precision::Double ? 0 : 1);
  return h;
}

void check_genericity(int n, double g, double alpha) {
  const double period = 2 * kPi / alpha;
  constexpr int kWindow = 64;
  for (int j = 1; j <= n; ++j) {
    for (int b = -kWindow; b <= kWindow; ++b) {
      const double x = j * g - period * b;
      const double a = std::round(x);
      if (a <= 0 && std::abs(x - a) < 1e-8) {
        throw GenericityViolation("g = " + std::to_string(g) + " violates genericity at j = " +
                                  std::to_string(j) + ", b = " + std::to_string(b));
      }
    }
  }
}

Complex theta1(Complex z, double p, Precision prec) {
  require_nome(p);
  Complex reduced;
  if (prec == Precision::Extended) {
    using LC = std::complex<long double>;
    LC r = reduced_theta<long double>(LC(z), static_cast<long double>(p));
    reduced = Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  } else {
    reduced = reduced_theta<double>(z, p);
  }
  return quarter_power(p) * reduced;
}

Complex theta1(double z, double p, Precision prec) { return theta1(Complex(z, 0.0), p, prec); }

Complex theta1_product(Complex z, double p) {
  require_nome(p);
  Complex prod = 2.0 * std::sin(z);
  const Complex c2 = std::cos(2.0 * z);
  double p2l = 1.0;
  for (int l = 1; l < kMaxTerms; ++l) {
    p2l *= p * p;
    const Complex factor = (1.0 - p2l) * (1.0 - 2.0 * p2l * c2 + p2l * p2l);
    prod *= factor;
    if (std::abs(factor - 1.0) < 1e-18) break;
  }
  return quarter_power(p) * prod;
}

double bracket(double z, const ModelParams& params) {
  require_nome(params.p);
  if (params.precision == Precision::Extended) {
    return static_cast<double>(bracket_impl<long double, long double>(
        static_cast<long double>(z), static_cast<long double>(params.p),
        static_cast<long double>(params.alpha)));
  }
  return bracket_impl<double, double>(z, params.p, params.alpha);
}

Complex bracket(Complex z, const ModelParams& params) {
  require_nome(params.p);
  if (params.precision == Precision::Extended) {
    using LC = std::complex<long double>;
    LC r = bracket_impl<long double, LC>(LC(z), static_cast<long double>(params.p),
                                         static_cast<long double>(params.alpha));
    return Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  }
  return bracket_impl<double, Complex>(z, params.p, params.alpha);
}

double elliptic_factorial(double z, int k, const ModelParams& params) {
  if (k < 0) throw InvalidArgument("elliptic_factorial: k must be >= 0");
  double r = 1.0;
  for (int l = 0; l < k; ++l) r *= bracket(z + l, params);
  return r;
}

double trig_bracket(double z, double alpha) {
  const double den = std::sin(alpha / 2);
  if (std::abs(den) < 1e-14) throw SingularDenominator("sin(alpha/2) vanishes");
  return std::sin(alpha * z / 2) / den;
}

double trig_factorial(double z, int k, double alpha) {
  if (k < 0) throw InvalidArgument("trig_factorial: k must be >= 0");
  double r = 1.0;
  for (int l = 0; l < k; ++l) r *= trig_bracket(z + l, alpha);
  return r;
}

}  // namespace ellrs
