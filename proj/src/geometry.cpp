#include "phasebound/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "phasebound/errors.hpp"

namespace phasebound {

namespace {

constexpr double kRadiusRounding = 1e-12;

double gap_unchecked(double w, cplx z) {
  const double modulus_gap = w - std::abs(z);
  const double ratio = std::abs((z - w) / w);
  const double real_gap = w - z.real();
  return modulus_gap * modulus_gap + 2.0 * ratio * z.imag() * z.imag() - real_gap * real_gap;
}

void track(Lemma1ScanResult& result, double gap, cplx z) {
  if (result.evaluated == 0 || gap < result.min_gap) {
    result.min_gap = gap;
    result.argmin = z;
  }
  ++result.evaluated;
}

}  // namespace

bool Lemma1Input::admissible() const {
  if (!(w > 0.0) || !std::isfinite(w) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return std::abs(z - w) <= 0.5 * w * (1.0 + kRadiusRounding);
}

double lemma1_gap(const Lemma1Input& input) {
  if (!input.admissible()) {
    std::ostringstream os;
    os << "lemma1_gap: (w=" << input.w << ", z=" << input.z << ") outside |z - w| <= w/2 with w > 0";
    throw InadmissibleInput(os.str());
  }
  return gap_unchecked(input.w, input.z);
}

Lemma1ScanResult lemma1_scan(std::size_t radius_steps, std::size_t angle_steps) {
  if (radius_steps < 2 || angle_steps < 2) {
    throw std::invalid_argument("lemma1_scan needs at least 2 radius steps and 2 angle steps");
  }
  Lemma1ScanResult result;
  result.radius_steps = radius_steps;
  result.angle_steps = angle_steps;
  for (std::size_t i = 0; i < radius_steps; ++i) {
    const double r = 0.5 * static_cast<double>(i) / static_cast<double>(radius_steps - 1);
    for (std::size_t j = 0; j < angle_steps; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angle_steps);
      const cplx z = 1.0 + std::polar(r, theta);
      track(result, lemma1_gap({1.0, z}), z);
    }
  }
  return result;
}

Lemma1ScanResult lemma1_random_search(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> log_w(-3.0 * std::numbers::ln10, 3.0 * std::numbers::ln10);
  Lemma1ScanResult result;
  for (std::size_t s = 0; s < samples; ++s) {
    const double w = std::exp(log_w(rng));
    // sqrt of a uniform variate gives area-uniform radii
    const double r = 0.5 * w * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    const cplx z = w + std::polar(r, theta);
    // report the gap normalized to w = 1 so magnitudes are comparable
    track(result, lemma1_gap({w, z}) / (w * w), z / w);
  }
  return result;
}

double lemma1_reduced_bracket(double x, double y) {
  const double r = std::hypot(x, y);
  return y * y + 8.0 * r + 4.0 * x + 4.0 * x * x * y * y + 8.0 * x * r + 4.0 * y * y * r;
}

Decomposition decompose(cplx fhat, cplx ghat) {
  const double modulus = std::abs(fhat);
  if (modulus == 0.0) throw InadmissibleInput("decompose: f^ = 0 has no direction");
  const cplx rotated = std::conj(fhat) / modulus * (ghat - fhat);
  return {rotated.real(), rotated.imag()};
}

double pointwise_first_term_check(cplx fhat, cplx ghat, double epsilon) {
  const double f_mod = std::abs(fhat);
  const double distance = std::abs(fhat - ghat);
  if (!(epsilon > 0.0) || f_mod < 10.0 * epsilon || distance > epsilon) {
    std::ostringstream os;
    os << "pointwise_first_term_check: requires |f^| >= 10 eps and |f^ - g^| <= eps (|f^|=" << f_mod
       << ", |f^-g^|=" << distance << ", eps=" << epsilon << ")";
    throw InadmissibleInput(os.str());
  }
  const double modulus_gap = f_mod - std::abs(ghat);
  const double tangential = (std::conj(fhat) / f_mod * ghat).imag();
  return modulus_gap * modulus_gap + 1.2 * tangential * tangential - distance * distance;
}

}  // namespace phasebound
