#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>

#include "phasebound/grid.hpp"

namespace phasebound {

/// exp(-1/(1 - t^2)) on (-1, 1), zero elsewhere: even, nonnegative, C^inf.
double smooth_bump(double t);

/// max{0, 1 - |xi|}.
double triangle(double xi);

/// Euclidean norm of a coordinate tuple.
double radius(std::span<const double> x);

/// Function-pair families used to exercise the stability bounds.
enum class Family {
  gaussian,             // two nearby Gaussians, different widths/centers/amplitudes
  shifted_gaussian,     // Gaussian and an exact translate (optionally rescaled)
  sign_flipped_bump,    // f^ = phi(|xi|/L)/L, g^ = -f^
  triangle_even,        // f^ = triangle, g^ = f^ + real even (radial) bump perturbation
  random_band_limited,  // sums of complex bumps; g^ = shifted f^ plus a small band-limited perturbation
};

inline constexpr std::array kAllFamilies = {Family::gaussian, Family::shifted_gaussian, Family::sign_flipped_bump,
                                            Family::triangle_even, Family::random_band_limited};

std::string_view family_name(Family family);

struct FunctionPair {
  SampledFunction f;
  SampledFunction g;
  std::string label;
};

/// Draws one pair from `family` on `grid`. Frequency-domain families need the
/// dual grid to cover [-4, 4] per axis.
FunctionPair random_pair(Family family, const GridSpec& grid, std::mt19937_64& rng);

/// Real function whose spectrum is f^(xi) = (1/L) phi(|xi|/L), sampled on
/// `grid` via the inverse transform.
SampledFunction scaled_bump_function(const GridSpec& grid, double scale);

/// Function with f^ = triangle(|xi|).
SampledFunction triangle_function(const GridSpec& grid);

}  // namespace phasebound
