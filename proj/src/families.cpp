#include "phasebound/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace phasebound {

double smooth_bump(double t) {
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

double triangle(double xi) { return std::max(0.0, 1.0 - std::abs(xi)); }

double radius(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::gaussian: return "gaussian";
    case Family::shifted_gaussian: return "shifted_gaussian";
    case Family::sign_flipped_bump: return "sign_flipped_bump";
    case Family::triangle_even: return "triangle_even";
    case Family::random_band_limited: return "random_band_limited";
  }
  return "unknown";
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

struct Gaussian {
  cplx amplitude{1.0, 0.0};
  double width = 1.0;
  std::vector<double> center;

  cplx operator()(std::span<const double> x) const {
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - center[i]) * (x[i] - center[i]);
    return amplitude * std::exp(-std::numbers::pi * r2 / (width * width));
  }
};

Gaussian random_gaussian(std::mt19937_64& rng, std::size_t dim) {
  Gaussian g;
  g.amplitude = uniform(rng, 0.5, 2.0);
  g.width = uniform(rng, 0.5, 2.0);
  g.center.resize(dim);
  for (double& c : g.center) c = uniform(rng, -1.0, 1.0);
  return g;
}

Gaussian perturbed(const Gaussian& base, std::mt19937_64& rng) {
  Gaussian g = base;
  g.amplitude *= std::polar(1.0 + uniform(rng, -0.2, 0.2), uniform(rng, -0.3, 0.3));
  g.width *= 1.0 + uniform(rng, -0.2, 0.2);
  for (double& c : g.center) c += uniform(rng, -0.2, 0.2);
  return g;
}

struct Bump {
  cplx amplitude{1.0, 0.0};
  double width = 1.0;
  std::vector<double> center;

  cplx operator()(std::span<const double> xi) const {
    double r2 = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) r2 += (xi[i] - center[i]) * (xi[i] - center[i]);
    return amplitude * smooth_bump(std::sqrt(r2) / width);
  }
};

std::vector<Bump> random_bumps(std::mt19937_64& rng, std::size_t dim, double amplitude_scale) {
  const auto count = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
  std::vector<Bump> bumps(count);
  for (Bump& b : bumps) {
    b.amplitude = amplitude_scale * std::polar(uniform(rng, 0.2, 1.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    b.width = uniform(rng, 0.3, 1.5);
    b.center.resize(dim);
    for (double& c : b.center) c = uniform(rng, -2.5, 2.5);
  }
  return bumps;
}

SampledFunction from_spectrum(const GridSpec& grid, auto&& spectrum_fn) {
  return inverse_transform(Spectrum::sample(grid.dual(), spectrum_fn));
}

}  // namespace

SampledFunction scaled_bump_function(const GridSpec& grid, double scale) {
  return from_spectrum(grid, [scale](std::span<const double> xi) { return smooth_bump(radius(xi) / scale) / scale; });
}

SampledFunction triangle_function(const GridSpec& grid) {
  return from_spectrum(grid, [](std::span<const double> xi) { return triangle(radius(xi)); });
}

FunctionPair random_pair(Family family, const GridSpec& grid, std::mt19937_64& rng) {
  const std::size_t dim = grid.dimension();
  std::ostringstream label;
  label << family_name(family);

  switch (family) {
    case Family::gaussian: {
      const Gaussian a = random_gaussian(rng, dim);
      const Gaussian b = perturbed(a, rng);
      return {SampledFunction::sample(grid, a), SampledFunction::sample(grid, b), label.str()};
    }
    case Family::shifted_gaussian: {
      const Gaussian a = random_gaussian(rng, dim);
      std::vector<double> offset(dim);
      for (double& o : offset) o = uniform(rng, -0.5, 0.5);
      const double rescale = uniform(rng, 0.0, 1.0) < 0.5 ? 1.0 : 1.0 + uniform(rng, -0.1, 0.1);
      SampledFunction f = SampledFunction::sample(grid, a);
      SampledFunction g = rescale * shift(f, offset);
      label << " offset0=" << offset[0] << " rescale=" << rescale;
      return {std::move(f), std::move(g), label.str()};
    }
    case Family::sign_flipped_bump: {
      const double scale = uniform(rng, 1.0, 4.0);
      const double amplitude = uniform(rng, 0.5, 2.0);
      SampledFunction f = amplitude * scaled_bump_function(grid, scale);
      SampledFunction g = -f;
      label << " L=" << scale;
      return {std::move(f), std::move(g), label.str()};
    }
    case Family::triangle_even: {
      const double a = uniform(rng, -0.3, 0.3);
      const double center = uniform(rng, 0.0, 1.5);
      const double width = uniform(rng, 0.1, 0.5);
      SampledFunction f = triangle_function(grid);
      SampledFunction g = from_spectrum(grid, [&](std::span<const double> xi) {
        return triangle(radius(xi)) + a * smooth_bump((radius(xi) - center) / width);
      });
      label << " a=" << a << " c=" << center << " w=" << width;
      return {std::move(f), std::move(g), label.str()};
    }
    case Family::random_band_limited: {
      const std::vector<Bump> base = random_bumps(rng, dim, 1.0);
      const std::vector<Bump> noise = random_bumps(rng, dim, uniform(rng, 0.0, 0.2));
      std::vector<double> offset(dim);
      for (double& o : offset) o = uniform(rng, -0.2, 0.2);
      auto f_hat = [&](std::span<const double> xi) {
        cplx v = 0.0;
        for (const Bump& b : base) v += b(xi);
        return v;
      };
      auto g_hat = [&](std::span<const double> xi) {
        double phase = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) phase += offset[i] * xi[i];
        cplx v = f_hat(xi) * std::polar(1.0, -2.0 * std::numbers::pi * phase);
        for (const Bump& b : noise) v += b(xi);
        return v;
      };
      label << " bumps=" << base.size() << " offset0=" << offset[0];
      return {from_spectrum(grid, f_hat), from_spectrum(grid, g_hat), label.str()};
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace phasebound
