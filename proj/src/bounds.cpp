#include "phasebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace phasebound {

namespace {

constexpr double kRelativeZero = 1e-12;
constexpr double kRealSpectrumTolerance = 1e-8;
constexpr double kTieTolerance = 1e-12;

void require_p(double p, const char* what) {
  if (!(p >= 1.0 && p < 2.0)) {
    std::ostringstream os;
    os << what << ": p must lie in [1, 2), got " << p;
    throw std::invalid_argument(os.str());
  }
}

double max_modulus(const Spectrum& s) {
  double m = 0.0;
  for (const cplx& v : s.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

void TailParams::validate() const {
  if (k < 1 || n < 1) throw HypothesisViolation("hypothesis violated: tail bound needs positive k and n");
  if (2 * k <= n + 2) {
    throw HypothesisViolation("hypothesis violated: tail bound requires k > (n + 2)/2, got k=" + std::to_string(k) +
                              ", n=" + std::to_string(n));
  }
}

double default_zero_tolerance(const Spectrum& spectrum) { return kRelativeZero * max_modulus(spectrum); }

double sublevel_mass(const Spectrum& spectrum, double threshold) {
  CompensatedSum sum;
  for (const cplx& v : spectrum.values()) {
    if (std::abs(v) <= threshold) sum += std::norm(v);
  }
  return spectrum.grid().cell_volume() * sum.value();
}

double h_f(const Spectrum& f_spectrum, double x, double p) {
  require_p(p, "h_f");
  if (!(x >= 0.0)) throw std::invalid_argument("h_f: x must be nonnegative");
  const double smooth = std::sqrt(8.0 * sublevel_mass(f_spectrum, 10.0 * x));
  return p > 1.0 ? smooth + x : smooth;
}

double spectral_tail(const Spectrum& f_spectrum, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("spectral_tail: epsilon must be positive");
  return sublevel_mass(f_spectrum, 10.0 * epsilon);
}

namespace {

// || Im(conj(f^)/|f^| g^) ||_2 without the factor 2.
double tangential_norm(const Spectrum& f_spectrum, const Spectrum& g_spectrum, double zero_tol) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < f_spectrum.size(); ++i) {
    const cplx fv = f_spectrum[i];
    const double modulus = std::abs(fv);
    if (modulus <= zero_tol) continue;
    // multiply before dividing: Im(conj(a) a) is exactly 0 in floating point
    const double t = (std::conj(fv) * g_spectrum[i]).imag() / modulus;
    sum += t * t;
  }
  return std::sqrt(f_spectrum.grid().cell_volume() * sum.value());
}

}  // namespace

double translation_term(const Spectrum& f_spectrum, const Spectrum& g_spectrum, std::optional<double> zero_tol) {
  require_same_grid(f_spectrum, g_spectrum, "translation_term");
  const double tol = zero_tol.value_or(default_zero_tolerance(f_spectrum));
  if (!(tol >= 0.0)) throw std::invalid_argument("translation_term: zero_tol must be nonnegative");
  return 2.0 * tangential_norm(f_spectrum, g_spectrum, tol);
}

double modulus_distance(const Spectrum& f_spectrum, const Spectrum& g_spectrum) {
  require_same_grid(f_spectrum, g_spectrum, "modulus_distance");
  CompensatedSum sum;
  for (std::size_t i = 0; i < f_spectrum.size(); ++i) {
    const double d = std::abs(f_spectrum[i]) - std::abs(g_spectrum[i]);
    sum += d * d;
  }
  return std::sqrt(f_spectrum.grid().cell_volume() * sum.value());
}

double support_measure(const Spectrum& spectrum, std::optional<double> support_tol) {
  const double tol = support_tol.value_or(kRelativeZero * max_modulus(spectrum));
  if (!(tol >= 0.0)) throw std::invalid_argument("support_measure: support_tol must be nonnegative");
  const auto count =
      std::count_if(spectrum.values().begin(), spectrum.values().end(), [tol](cplx v) { return std::abs(v) > tol; });
  return static_cast<double>(count) * spectrum.grid().cell_volume();
}

ExceptionalSet exceptional_set(const Spectrum& f_spectrum, const Spectrum& g_spectrum, double epsilon) {
  require_same_grid(f_spectrum, g_spectrum, "exceptional_set");
  if (!(epsilon > 0.0)) throw std::invalid_argument("exceptional_set: epsilon must be positive");
  ExceptionalSet result;
  result.mask.assign(f_spectrum.size(), false);
  const double distance_floor = epsilon * (1.0 + kTieTolerance);
  for (std::size_t i = 0; i < f_spectrum.size(); ++i) {
    const bool large = std::abs(f_spectrum[i]) >= 10.0 * epsilon;
    if (large && std::abs(f_spectrum[i] - g_spectrum[i]) > distance_floor) {
      result.mask[i] = true;
      ++result.count;
    }
  }
  result.measure = static_cast<double>(result.count) * f_spectrum.grid().cell_volume();
  return result;
}

double quartic_modulus(cplx z) {
  const double a = std::abs(z.real());
  const double b = std::abs(z.imag());
  const double big = std::max(a, b);
  if (big == 0.0) return 0.0;
  const double ratio = std::min(a, b) / big;
  const double r2 = ratio * ratio;
  return big * std::sqrt(std::sqrt(1.0 + r2 * r2));
}

BoundReport evaluate_theorem(const SampledFunction& f, const SampledFunction& g, double p,
                             std::optional<double> zero_tol) {
  require_p(p, "evaluate_theorem");
  require_same_grid(f, g, "evaluate_theorem");

  const SampledFunction diff = f - g;
  const Spectrum f_spectrum = fourier_transform(f);
  const Spectrum g_spectrum = fourier_transform(g);
  const double tol = zero_tol.value_or(default_zero_tolerance(f_spectrum));

  BoundReport r;
  r.p = p;
  r.epsilon = lp_norm(diff, p);
  r.lhs = lp_norm(diff, 2.0);

  const double modulus = modulus_distance(f_spectrum, g_spectrum);
  const double tangential = tangential_norm(f_spectrum, g_spectrum, tol);
  const double tail = sublevel_mass(f_spectrum, 10.0 * r.epsilon);

  r.term_modulus = 2.0 * modulus;
  r.term_smoothness = h_f(f_spectrum, r.epsilon, p);
  r.term_translation = 2.0 * tangential;
  r.rhs = r.term_modulus + r.term_smoothness + r.term_translation;
  r.slack = r.rhs - r.lhs;

  r.squared_rhs = 2.0 * modulus * modulus + 1.2 * tangential * tangential + 8.0 * tail;
  if (p > 1.0) r.squared_rhs += r.epsilon * r.epsilon;
  r.squared_form_slack = r.squared_rhs - r.lhs * r.lhs;
  return r;
}

Corollary1Report evaluate_corollary1(const SampledFunction& f, const SampledFunction& g,
                                     std::optional<double> support_tol) {
  require_same_grid(f, g, "evaluate_corollary1");
  const Spectrum f_spectrum = fourier_transform(f);
  const Spectrum g_spectrum = fourier_transform(g);

  double max_imag = 0.0;
  for (const cplx& v : f_spectrum.values()) max_imag = std::max(max_imag, std::abs(v.imag()));
  const double scale = max_modulus(f_spectrum);
  if (max_imag > kRealSpectrumTolerance * scale) {
    std::ostringstream os;
    os << "hypothesis violated: f^ must be real-valued (max |Im f^| = " << max_imag << ", max |f^| = " << scale
       << ")";
    throw HypothesisViolation(os.str());
  }

  const SampledFunction diff = f - g;
  Corollary1Report r;
  r.support_measure = support_measure(f_spectrum, support_tol);
  r.epsilon = lp_norm(diff, 1.0);
  r.lhs = lp_norm(diff, 2.0);
  r.term_modulus = 2.0 * modulus_distance(f_spectrum, g_spectrum);
  r.term_smoothness = 30.0 * std::sqrt(r.support_measure) * r.epsilon;

  // f^ is real by hypothesis, so Im g^ = Im(g^ - f^); the difference form
  // drops the transform's roundoff in Im f^ and is exactly 0 for g = f.
  CompensatedSum imag_sum;
  for (std::size_t i = 0; i < g_spectrum.size(); ++i) {
    const double t = g_spectrum[i].imag() - f_spectrum[i].imag();
    imag_sum += t * t;
  }
  r.term_translation = 2.0 * std::sqrt(g_spectrum.grid().cell_volume() * imag_sum.value());

  r.rhs = r.term_modulus + r.term_smoothness + r.term_translation;
  r.slack = r.rhs - r.lhs;
  return r;
}

}  // namespace phasebound
