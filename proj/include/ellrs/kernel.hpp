#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace ellrs {

using Complex = std::complex<double>;

enum class Precision { Double, Extended };

std::string to_string(Precision p);
Precision precision_from_string(const std::string& s);

/// Parameters (n, m, g, p) of the discretized elliptic Ruijsenaars model.
///
/// In level-locked mode the scale is tied to the level by
/// alpha = 2 pi / (m + n g); this is the regime of the fusion ring and the
/// Verlinde algebra. In free mode alpha is supplied and g must pass the
/// numerical genericity gate (see check_genericity).
///
/// The Weyl shift rho_g = ((n-1)g, ..., g, 0) never appears explicitly:
/// it is folded into the (k - j) g offsets of every coefficient formula.
struct ModelParams {
  int n = 2;
  int m = 0;
  double g = 1.0;
  double p = 0.0;
  double alpha = 0.0;
  bool level_locked = true;
  Precision precision = Precision::Double;

  static ModelParams locked(int n, int m, double g, double p,
                            Precision prec = Precision::Double);
  /// Throws GenericityViolation when g fails the gate.
  static ModelParams free(int n, double g, double p, double alpha,
                          Precision prec = Precision::Double, int m = 0);

  /// 2 pi / alpha, the quasi-period of the bracket.
  double period() const;
  /// q = exp(i alpha).
  Complex q() const;

  /// Same mode and level with a different coupling; in level-locked mode
  /// alpha follows g.
  ModelParams with_g(double g_new) const;
  ModelParams with_p(double p_new) const;

  /// Hash over every field at full precision.
  std::uint64_t fingerprint() const;
};

/// Gate for |j g - a - (2 pi / alpha) b| >= 1e-8 over j = 1..n, a <= 0,
/// |b| <= 64. Throws GenericityViolation.
void check_genericity(int n, double g, double alpha);

/// Jacobi theta_1(z; p) from its sine series. For p < 0 the common factor
/// p^{1/4} is taken on the principal branch.
Complex theta1(Complex z, double p, Precision prec = Precision::Double);
Complex theta1(double z, double p, Precision prec = Precision::Double);
/// The product form, used as an independent check of the series.
Complex theta1_product(Complex z, double p);

/// [z; p] = theta_1(alpha z / 2; p) / ((alpha / 2) theta_1'(0; p)).
/// Real for real z and any p in (-1, 1).
double bracket(double z, const ModelParams& params);
Complex bracket(Complex z, const ModelParams& params);

/// [z]_k = prod_{0 <= l < k} [z + l].
double elliptic_factorial(double z, int k, const ModelParams& params);

/// [z]_q = sin(alpha z / 2) / sin(alpha / 2). Throws SingularDenominator
/// when sin(alpha / 2) vanishes.
double trig_bracket(double z, double alpha);
/// prod_{0 <= l < k} [z + l]_q.
double trig_factorial(double z, int k, double alpha);

}  // namespace ellrs
