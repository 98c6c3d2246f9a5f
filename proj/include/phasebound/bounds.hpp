#pragma once

#include <optional>
#include <vector>

#include "phasebound/grid.hpp"

namespace phasebound {

/// Relative certification tolerance: a bound is certified when
/// slack >= -kCertificationTolerance * rhs.
inline constexpr double kCertificationTolerance = 1e-6;

/**
 * Every term of the phase-retrieval stability estimate for one (f, g, p):
 *
 *   ||f-g||_2 <= 2 || |f^| - |g^| ||_2 + h_f(||f-g||_p) + 2 || Im conj(f^)|f^|^-1 g^ ||_2
 *
 * together with the squared form produced by the proof,
 *
 *   ||f-g||_2^2 <= 2 || |f^|-|g^| ||^2 + (6/5) || Im conj(f^)|f^|^-1 g^ ||^2
 *                  + [p > 1] ||f-g||_p^2 + 8 int_{|f^| <= 10 eps} |f^|^2.
 */
struct BoundReport {
  double p = 1.0;
  double epsilon = 0.0;  // ||f - g||_p
  double lhs = 0.0;      // ||f - g||_2
  double term_modulus = 0.0;
  double term_smoothness = 0.0;
  double term_translation = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double squared_form_slack = 0.0;
  // Right-hand side of the squared form; kept for certification, not part
  // of the serialized report.
  double squared_rhs = 0.0;

  [[nodiscard]] bool certified(double tolerance = kCertificationTolerance) const {
    return slack >= -tolerance * rhs;
  }
  [[nodiscard]] bool squared_form_certified(double tolerance = kCertificationTolerance) const {
    return squared_form_slack >= -tolerance * squared_rhs;
  }
};

/// Band-limited bound with real f^ supported on a set of measure L:
///   ||f-g||_2 <= 2 || |f^|-|g^| ||_2 + 30 sqrt(L) ||f-g||_1 + 2 ||Im g^||_2.
struct Corollary1Report {
  double support_measure = 0.0;  // L
  double epsilon = 0.0;          // ||f - g||_1
  double lhs = 0.0;
  double term_modulus = 0.0;
  double term_smoothness = 0.0;   // 30 sqrt(L) eps
  double term_translation = 0.0;  // 2 ||Im g^||_2
  double rhs = 0.0;
  double slack = 0.0;

  [[nodiscard]] bool certified(double tolerance = kCertificationTolerance) const {
    return slack >= -tolerance * rhs;
  }
};

struct ExceptionalSet {
  double measure = 0.0;
  std::size_t count = 0;
  std::vector<bool> mask;
};

/// Derivative order k and dimension n for the spectral tail estimate;
/// requires k > (n + 2) / 2.
struct TailParams {
  int k = 2;
  int n = 1;

  void validate() const;
  [[nodiscard]] double expected_exponent() const { return 2.0 - static_cast<double>(n) / k; }
};

/// 1e-12 * max |f^|: samples at or below this count as zeros of f^.
double default_zero_tolerance(const Spectrum& spectrum);

/// int_{|F| <= threshold} |F|^2, ties included.
double sublevel_mass(const Spectrum& spectrum, double threshold);

/// (8 int_{|f^| <= 10x} |f^|^2)^(1/2) + (x if p > 1 else 0), for p in [1, 2).
double h_f(const Spectrum& f_spectrum, double x, double p);

/// int_{|f^| <= 10 eps} |f^|^2 for eps > 0.
double spectral_tail(const Spectrum& f_spectrum, double epsilon);

/// 2 || Im(conj(f^)/|f^| g^) ||_2 with the integrand set to 0 where
/// |f^| <= zero_tol (default: default_zero_tolerance(f^)).
double translation_term(const Spectrum& f_spectrum, const Spectrum& g_spectrum,
                        std::optional<double> zero_tol = std::nullopt);

/// || |f^| - |g^| ||_2 (without the factor 2).
double modulus_distance(const Spectrum& f_spectrum, const Spectrum& g_spectrum);

/// Cell volume times the number of samples with |F| > support_tol
/// (default: 1e-12 * max |F|).
double support_measure(const Spectrum& spectrum, std::optional<double> support_tol = std::nullopt);

/// Frequencies with |f^| >= 10 eps and |f^ - g^| >= eps. Values of |f^ - g^|
/// within relative rounding (1e-12) of eps are treated as ties and left out.
ExceptionalSet exceptional_set(const Spectrum& f_spectrum, const Spectrum& g_spectrum, double epsilon);

/// ((Re z)^4 + (Im z)^4)^(1/4).
double quartic_modulus(cplx z);

BoundReport evaluate_theorem(const SampledFunction& f, const SampledFunction& g, double p,
                             std::optional<double> zero_tol = std::nullopt);

/// Throws HypothesisViolation when f^ has an imaginary part above
/// 1e-8 * max |f^|.
Corollary1Report evaluate_corollary1(const SampledFunction& f, const SampledFunction& g,
                                     std::optional<double> support_tol = std::nullopt);

}  // namespace phasebound
