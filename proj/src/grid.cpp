#include "phasebound/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace phasebound {

namespace {

// FFTW's planner is not re-entrant; plan execution on private buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

struct FftwPlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

using FftwBuffer = std::unique_ptr<fftw_complex[], FftwBufferDeleter>;
using FftwPlan = std::unique_ptr<fftw_plan_s, FftwPlanDeleter>;

bool is_odd_index_sum(const GridSpec& grid, std::size_t flat) {
  std::size_t parity = 0;
  for (std::size_t axis = grid.dimension(); axis-- > 0;) {
    const std::size_t n = grid.points(axis);
    parity += flat % n;
    flat /= n;
  }
  return (parity & 1U) != 0;
}

// Shared core of both directions. With x_j = (j - N/2) dx and
// xi_k = (k - N/2) dxi, exp(-+2 pi i x_j xi_k) factors per axis into
// (-1)^j (-1)^k (-1)^(N/2) exp(-+2 pi i j k / N), so the zero-centered
// transform is a plain DFT between two checkerboard modulations.
std::vector<cplx> centered_dft(const GridSpec& source, std::span<const cplx> in, int sign) {
  const std::size_t total = source.size();
  FftwBuffer buffer(fftw_alloc_complex(total));
  if (!buffer) throw std::bad_alloc();

  std::vector<int> dims(source.dimension());
  std::size_t half_sum = 0;
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    dims[axis] = static_cast<int>(source.points(axis));
    half_sum += source.points(axis) / 2;
  }

  FftwPlan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buffer.get(), buffer.get(), sign,
                             FFTW_ESTIMATE));
  }
  if (!plan) throw std::runtime_error("FFTW failed to create a plan for " + source.describe());

  for (std::size_t i = 0; i < total; ++i) {
    const cplx v = is_odd_index_sum(source, i) ? -in[i] : in[i];
    buffer[i][0] = v.real();
    buffer[i][1] = v.imag();
  }
  fftw_execute(plan.get());

  const double scale = source.cell_volume();
  const bool global_flip = (half_sum & 1U) != 0;
  std::vector<cplx> out(total);
  for (std::size_t i = 0; i < total; ++i) {
    const bool flip = is_odd_index_sum(source, i) != global_flip;
    const cplx v(buffer[i][0] * scale, buffer[i][1] * scale);
    out[i] = flip ? -v : v;
  }
  return out;
}

}  // namespace

GridSpec::GridSpec(std::vector<double> half_extent, std::vector<std::size_t> points_per_axis) {
  if (points_per_axis.empty() || points_per_axis.size() > kMaxDimension) {
    throw GridMismatch("grid dimension must be between 1 and 3, got " + std::to_string(points_per_axis.size()));
  }
  if (half_extent.size() != points_per_axis.size()) {
    throw GridMismatch("half_extent and points_per_axis have different lengths");
  }
  std::size_t total = 1;
  std::vector<double> dual_half(half_extent.size());
  for (std::size_t axis = 0; axis < half_extent.size(); ++axis) {
    const double t = half_extent[axis];
    const std::size_t n = points_per_axis[axis];
    if (!std::isfinite(t) || t <= 0.0) throw GridMismatch("half_extent must be positive and finite");
    if (n < 2 || n % 2 != 0) throw GridMismatch("points_per_axis must be a positive even integer");
    if (n > static_cast<std::size_t>(std::numeric_limits<int>::max()) ||
        total > static_cast<std::size_t>(std::numeric_limits<int>::max()) / n) {
      throw GridMismatch("grid point count overflows the supported array size");
    }
    total *= n;
    dual_half[axis] = static_cast<double>(n) / (4.0 * t);
    if (!(2.0 * t / static_cast<double>(n) > 0.0) || !std::isfinite(dual_half[axis])) {
      throw GridMismatch("grid spacing underflows");
    }
  }
  half_extent_ = std::move(half_extent);
  dual_half_extent_ = std::move(dual_half);
  points_ = std::move(points_per_axis);
  size_ = total;
}

GridSpec::GridSpec(std::vector<double> half_extent, std::vector<double> dual_half_extent,
                   std::vector<std::size_t> points, std::size_t size)
    : half_extent_(std::move(half_extent)),
      dual_half_extent_(std::move(dual_half_extent)),
      points_(std::move(points)),
      size_(size) {}

GridSpec GridSpec::cube(std::size_t dimension, double half_extent, std::size_t points_per_axis) {
  return GridSpec(std::vector<double>(dimension, half_extent), std::vector<std::size_t>(dimension, points_per_axis));
}

GridSpec GridSpec::with_frequency_extent(std::size_t dimension, double frequency_half_extent,
                                         std::size_t points_per_axis) {
  return cube(dimension, frequency_half_extent, points_per_axis).dual();
}

double GridSpec::spacing(std::size_t axis) const {
  return 2.0 * half_extent_.at(axis) / static_cast<double>(points_.at(axis));
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (std::size_t axis = 0; axis < dimension(); ++axis) v *= spacing(axis);
  return v;
}

double GridSpec::coordinate(std::size_t axis, std::size_t index) const {
  const auto n = static_cast<double>(points_.at(axis));
  return (static_cast<double>(index) - n / 2.0) * spacing(axis);
}

void GridSpec::coordinates(std::size_t flat, std::span<double> out) const {
  for (std::size_t axis = dimension(); axis-- > 0;) {
    const std::size_t n = points_[axis];
    out[axis] = coordinate(axis, flat % n);
    flat /= n;
  }
}

GridSpec GridSpec::dual() const { return GridSpec(dual_half_extent_, half_extent_, points_, size_); }

std::string GridSpec::describe() const {
  std::ostringstream os;
  os << "n=" << dimension() << " T=[";
  for (std::size_t i = 0; i < dimension(); ++i) os << (i ? "," : "") << half_extent_[i];
  os << "] N=[";
  for (std::size_t i = 0; i < dimension(); ++i) os << (i ? "," : "") << points_[i];
  os << "]";
  return os.str();
}

double lp_norm(std::span<const cplx> values, double cell_volume, double p) {
  if (std::isnan(p) || p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1 or p = infinity");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  CompensatedSum sum;
  if (p == 2.0) {
    for (const cplx& v : values) sum += std::norm(v);
    return std::sqrt(cell_volume * sum.value());
  }
  for (const cplx& v : values) sum += std::pow(std::abs(v), p);
  return std::pow(cell_volume * sum.value(), 1.0 / p);
}

Spectrum fourier_transform(const SampledFunction& f) {
  return Spectrum(f.grid().dual(), centered_dft(f.grid(), f.values(), FFTW_FORWARD));
}

SampledFunction inverse_transform(const Spectrum& spectrum) {
  return SampledFunction(spectrum.grid().dual(), centered_dft(spectrum.grid(), spectrum.values(), FFTW_BACKWARD));
}

SampledFunction shift(const SampledFunction& f, std::span<const double> offset) {
  if (offset.size() != f.grid().dimension()) {
    throw GridMismatch("shift offset has " + std::to_string(offset.size()) + " components for a " +
                       std::to_string(f.grid().dimension()) + "-dimensional grid");
  }
  if (std::all_of(offset.begin(), offset.end(), [](double e) { return e == 0.0; })) return f;

  const Spectrum spectrum = fourier_transform(f);
  const GridSpec& fgrid = spectrum.grid();
  std::vector<cplx> shifted(spectrum.size());
  std::vector<double> xi(fgrid.dimension());
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    fgrid.coordinates(i, xi);
    double phase = 0.0;
    for (std::size_t axis = 0; axis < xi.size(); ++axis) phase += offset[axis] * xi[axis];
    shifted[i] = spectrum[i] * std::polar(1.0, -2.0 * std::numbers::pi * phase);
  }
  return inverse_transform(Spectrum(fgrid, std::move(shifted)));
}

SampledFunction shift(const SampledFunction& f, double offset) {
  const double o[1] = {offset};
  return shift(f, std::span<const double>(o));
}

}  // namespace phasebound
