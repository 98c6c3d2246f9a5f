#include "phasebound/regression.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "phasebound/numeric.hpp"

namespace phasebound {

LogLogFit fit_log_log(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_log_log: x and y differ in length");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]) || x[i] <= 0.0 || y[i] < 0.0) {
      throw std::invalid_argument("fit_log_log: parameters must be positive and observables nonnegative");
    }
    if (y[i] == 0.0) continue;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const std::size_t m = lx.size();
  if (m < 3) throw std::invalid_argument("fit_log_log: need at least 3 nonzero observables");

  CompensatedSum sx;
  CompensatedSum sy;
  for (std::size_t i = 0; i < m; ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx.value() / static_cast<double>(m);
  const double my = sy.value() / static_cast<double>(m);

  CompensatedSum sxx;
  CompensatedSum sxy;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx.value() == 0.0) throw std::invalid_argument("fit_log_log: parameters are all equal");

  LogLogFit fit;
  fit.points = m;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;

  CompensatedSum ssr;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ssr += r * r;
  }
  fit.slope_stderr = std::sqrt(ssr.value() / static_cast<double>(m - 2) / sxx.value());
  return fit;
}

}  // namespace phasebound
