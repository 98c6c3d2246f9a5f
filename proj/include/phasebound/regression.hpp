#pragma once

#include <cstddef>
#include <span>

namespace phasebound {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares of log(y) on log(x). Pairs with y == 0 are
/// skipped; negative or non-finite values are rejected. Needs at least three
/// usable pairs (the slope standard error uses m - 2 degrees of freedom).
LogLogFit fit_log_log(std::span<const double> x, std::span<const double> y);

}  // namespace phasebound
