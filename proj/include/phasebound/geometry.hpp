#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace phasebound {

using cplx = std::complex<double>;

/// Pair (w, z) for the half-radius disk inequality
///   |w - Re z|^2 <= |w - |z||^2 + 2 |(z - w)/w| (Im z)^2,  |z - w| <= w/2.
struct Lemma1Input {
  double w = 1.0;
  cplx z{1.0, 0.0};

  /// w > 0 and z in the closed disk of radius w/2 around w (up to a
  /// relative rounding allowance of 1e-12 on the radius).
  [[nodiscard]] bool admissible() const;
};

/// RHS - LHS of the disk inequality. Throws InadmissibleInput outside the
/// disk or for w = 0, where the ratio term is undefined.
double lemma1_gap(const Lemma1Input& input);

struct Lemma1ScanResult {
  double min_gap = 0.0;
  cplx argmin{1.0, 0.0};
  std::size_t radius_steps = 0;
  std::size_t angle_steps = 0;
  std::size_t evaluated = 0;
};

/// Brute-force search with w = 1 over the polar lattice
/// z = 1 + r e^{i theta}, r = (1/2) i / (radius_steps - 1), theta = 2 pi j / angle_steps.
/// The first minimum encountered wins ties.
Lemma1ScanResult lemma1_scan(std::size_t radius_steps, std::size_t angle_steps);

/// Same inequality on `samples` points drawn uniformly from the disk
/// |z - w| <= w/2, with w drawn log-uniformly from [1e-3, 1e3].
Lemma1ScanResult lemma1_random_search(std::size_t samples, std::uint64_t seed);

/// The bracket of the reduced polynomial in the disk-inequality proof, with
/// z = (1 + x) + i y and r = sqrt(x^2 + y^2):
///   y^2 + 8r + 4x + 4x^2 y^2 + 8xr + 4y^2 r.
/// Nonnegative for r <= 1/2.
double lemma1_reduced_bracket(double x, double y);

/// Components of g^ - f^ in the orthonormal frame (f^/|f^|, i f^/|f^|):
/// g^ = f^ + a f^/|f^| + b i f^/|f^|.
struct Decomposition {
  double a = 0.0;  // radial
  double b = 0.0;  // tangential (translation direction)
};

/// Throws InadmissibleInput when fhat == 0 (no direction).
Decomposition decompose(cplx fhat, cplx ghat);

/// RHS - LHS of the pointwise first-term estimate
///   |f^ - g^|^2 <= (|f^| - |g^|)^2 + (6/5) |Im(conj(f^)/|f^| g^)|^2,
/// valid when |f^| >= 10 eps and |f^ - g^| <= eps.
double pointwise_first_term_check(cplx fhat, cplx ghat, double epsilon);

}  // namespace phasebound
