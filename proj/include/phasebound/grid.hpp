#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phasebound/errors.hpp"
#include "phasebound/numeric.hpp"

namespace phasebound {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDimension = 3;

/**
 * Uniform zero-centered lattice on [-T, T)^n with N points per axis.
 *
 * Axis i has spacing 2T_i/N_i and coordinates (j - N_i/2) * spacing for
 * j = 0..N_i-1, so index N_i/2 sits at the origin and the single Nyquist
 * point is at the negative end. The dual lattice (frequency domain) has
 * spacing 1/(N_i * dx_i) and half-extent 1/(2 dx_i) = N_i/(4 T_i).
 *
 * Samples are stored row-major (last axis fastest).
 */
class GridSpec {
 public:
  GridSpec(std::vector<double> half_extent, std::vector<std::size_t> points_per_axis);

  /// Same extent and resolution on every axis.
  static GridSpec cube(std::size_t dimension, double half_extent, std::size_t points_per_axis);

  /// Grid whose dual has the given half-extent and resolution, i.e. the
  /// frequency lattice covers [-half_extent, half_extent)^n.
  static GridSpec with_frequency_extent(std::size_t dimension, double frequency_half_extent,
                                        std::size_t points_per_axis);

  [[nodiscard]] std::size_t dimension() const { return points_.size(); }
  [[nodiscard]] double half_extent(std::size_t axis) const { return half_extent_.at(axis); }
  [[nodiscard]] std::size_t points(std::size_t axis) const { return points_.at(axis); }
  [[nodiscard]] const std::vector<double>& half_extents() const { return half_extent_; }
  [[nodiscard]] const std::vector<std::size_t>& points_per_axis() const { return points_; }

  [[nodiscard]] double spacing(std::size_t axis) const;
  [[nodiscard]] double cell_volume() const;
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] double coordinate(std::size_t axis, std::size_t index) const;
  /// Physical coordinates of the flat (row-major) sample index.
  void coordinates(std::size_t flat, std::span<double> out) const;

  [[nodiscard]] GridSpec dual() const;

  bool operator==(const GridSpec&) const = default;

  [[nodiscard]] std::string describe() const;

 private:
  GridSpec(std::vector<double> half_extent, std::vector<double> dual_half_extent,
           std::vector<std::size_t> points, std::size_t size);

  std::vector<double> half_extent_;
  // Stored rather than recomputed so dual().dual() reproduces *this exactly.
  std::vector<double> dual_half_extent_;
  std::vector<std::size_t> points_;
  std::size_t size_ = 0;
};

enum class Domain { space, frequency };

/// Complex samples on a GridSpec. Immutable after construction; every sample
/// is finite. `SampledFunction` lives on a space grid, `Spectrum` on its dual.
template <Domain D>
class Field {
 public:
  Field(GridSpec grid, std::vector<cplx> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw GridMismatch("sample count " + std::to_string(values_.size()) +
                         " does not match grid point count " + std::to_string(grid_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
        throw NonFiniteSample("non-finite sample at index " + std::to_string(i));
      }
    }
  }

  static Field zeros(GridSpec grid) {
    std::vector<cplx> values(grid.size());
    return Field(std::move(grid), std::move(values));
  }

  /// Samples `fn(coords)` at every grid point; coords is a span of length n.
  template <class Fn>
  static Field sample(GridSpec grid, Fn&& fn) {
    std::vector<cplx> values(grid.size());
    std::vector<double> x(grid.dimension());
    for (std::size_t i = 0; i < values.size(); ++i) {
      grid.coordinates(i, x);
      values[i] = cplx(fn(std::span<const double>(x)));
    }
    return Field(std::move(grid), std::move(values));
  }

  [[nodiscard]] const GridSpec& grid() const { return grid_; }
  [[nodiscard]] std::span<const cplx> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const cplx& operator[](std::size_t i) const { return values_[i]; }

  /// Pointwise map; the result stays on the same grid.
  template <class Fn>
  [[nodiscard]] Field map(Fn&& fn) const {
    std::vector<cplx> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = cplx(fn(values_[i]));
    return Field(grid_, std::move(out));
  }

  friend Field operator+(const Field& a, const Field& b) { return combine(a, b, 1.0, 1.0); }
  friend Field operator-(const Field& a, const Field& b) { return combine(a, b, 1.0, -1.0); }
  friend Field operator-(const Field& a) { return a.map([](cplx v) { return -v; }); }
  friend Field operator*(cplx s, const Field& a) { return a.map([s](cplx v) { return s * v; }); }

  /// alpha * a + beta * b on a shared grid.
  static Field combine(const Field& a, const Field& b, cplx alpha, cplx beta) {
    if (!(a.grid_ == b.grid_)) throw GridMismatch("fields live on different grids");
    std::vector<cplx> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * a.values_[i] + beta * b.values_[i];
    return Field(a.grid_, std::move(out));
  }

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
};

using SampledFunction = Field<Domain::space>;
using Spectrum = Field<Domain::frequency>;

template <Domain A, Domain B>
void require_same_grid(const Field<A>& a, const Field<B>& b, const char* what) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch(std::string(what) + ": grid mismatch (" + a.grid().describe() + " vs " +
                       b.grid().describe() + ")");
  }
}

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Rectangle-rule L^p norm over a uniform grid: (dV * sum |v|^p)^(1/p), or
/// max |v| for p = infinity.
double lp_norm(std::span<const cplx> values, double cell_volume, double p);

template <Domain D>
double lp_norm(const Field<D>& f, double p) {
  return lp_norm(f.values(), f.grid().cell_volume(), p);
}

/// Continuous transform f^(xi) = int f(x) exp(-2 pi i x.xi) dx, approximated
/// by the zero-centered DFT scaled by the cell volume. Unitary: discrete
/// Plancherel and Hausdorff-Young hold with constant 1.
Spectrum fourier_transform(const SampledFunction& f);

SampledFunction inverse_transform(const Spectrum& spectrum);

/// Translation f(. - offset), done exactly in the frequency domain: the
/// spectrum is multiplied by exp(-2 pi i offset.xi) and inverted.
SampledFunction shift(const SampledFunction& f, std::span<const double> offset);
SampledFunction shift(const SampledFunction& f, double offset);

}  // namespace phasebound
