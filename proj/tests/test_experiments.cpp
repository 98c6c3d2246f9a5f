#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phasebound/errors.hpp"
#include "phasebound/experiments.hpp"
#include "phasebound/families.hpp"
#include "phasebound/regression.hpp"

using namespace phasebound;

TEST_CASE("log-log regression") {
  const std::vector<double> x = {1.0, 2.0, 4.0, 8.0};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 1.5));
  const LogLogFit fit = fit_log_log(x, y);
  CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(fit.slope_stderr < 1e-12);
  CHECK(fit.points == 4);

  // zeros are skipped, negatives rejected
  const std::vector<double> with_zero = {0.0, y[1], y[2], y[3]};
  CHECK(fit_log_log(x, with_zero).points == 3);
  const std::vector<double> negative = {-1.0, y[1], y[2], y[3]};
  CHECK_THROWS_AS(fit_log_log(x, negative), std::invalid_argument);
  const std::vector<double> short_x = {1.0, 2.0};
  CHECK_THROWS_AS(fit_log_log(short_x, short_x), std::invalid_argument);
}

TEST_CASE("scaling results") {
  const std::vector<double> x = {1.0, 2.0, 4.0, 8.0};
  const std::vector<double> y = {1.0, 0.5, 0.25, 0.125};
  const ScalingResult ok = make_scaling_result("decay", x, y, -1.0, 0.05);
  CHECK(ok.pass);
  CHECK(ok.fitted_slope == doctest::Approx(-1.0));
  const ScalingResult off = make_scaling_result("decay", x, y, -0.5, 0.05);
  CHECK_FALSE(off.pass);
  const std::vector<double> few = {1.0, 0.0, 0.25, 0.125};
  CHECK_THROWS_AS(make_scaling_result("decay", x, few, -1.0, 0.05), std::invalid_argument);
}

TEST_CASE("log space") {
  const std::vector<double> v = log_space(1e-4, 1e-2, 9);
  REQUIRE(v.size() == 9);
  CHECK(v.front() == doctest::Approx(1e-4));
  CHECK(v.back() == doctest::Approx(1e-2));
  CHECK(v[4] == doctest::Approx(1e-3));
}

TEST_CASE("default configurations") {
  CHECK(default_experiment_config("optimality").sweep == std::vector<double>{4, 8, 16, 32, 64});
  CHECK(default_experiment_config("tail", 3, 2).grid().dimension() == 2);
  CHECK_THROWS_AS(default_experiment_config("bogus"), std::invalid_argument);
}

TEST_CASE("optimality family") {
  const GridSpec grid = default_experiment_config("optimality").grid();
  const auto [f, g] = optimality_family(8.0, grid);
  const Spectrum fs = fourier_transform(f);
  const Spectrum gs = fourier_transform(g);
  double max_imag = 0.0;
  double mismatch = 0.0;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    max_imag = std::max(max_imag, std::abs(fs[k].imag()));
    mismatch = std::max(mismatch, std::abs(std::abs(fs[k]) - std::abs(gs[k])));
  }
  CHECK(max_imag < 1e-12);
  CHECK(mismatch < 1e-12);
  CHECK_THROWS_AS(optimality_family(2048.0, grid), std::invalid_argument);
}

TEST_CASE("optimality experiment") {
  const ExperimentConfig c = default_experiment_config("optimality");
  const OptimalityResult r = optimality_experiment(c.sweep, c.grid());
  CHECK(std::abs(r.l2.fitted_slope + 0.5) <= 0.05);
  CHECK(std::abs(r.l1.fitted_slope + 1.0) <= 0.05);
  CHECK(r.theorem_certified);
  CHECK(r.corollary1_certified);
  // the corollary ratio does not drift with L
  CHECK(r.corollary1_ratio_spread <= 1.1);
  CHECK(r.pass());
}

TEST_CASE("triangle closed form") {
  CHECK(triangle_h_f_closed_form(0.05) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(triangle_h_f_closed_form(0.01) == doctest::Approx(std::sqrt(16.0 / 3.0) * std::pow(0.1, 1.5)).epsilon(1e-14));
  CHECK(triangle_h_f_closed_form(1.0) == doctest::Approx(std::sqrt(16.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("triangle experiment") {
  const ExperimentConfig c = default_experiment_config("triangle");
  const TriangleResult r = triangle_experiment(central_bump_perturbation(), c.sweep, c.grid());
  CHECK(std::abs(r.small_amplitude.fitted_slope - 1.5) <= 0.15);
  CHECK(r.large_amplitude_slope <= 1.0);
  CHECK(r.residual_bounded);
  CHECK(r.theorem_certified);
  CHECK(r.pass());
}

TEST_CASE("triangle experiment rejects odd perturbations") {
  const ExperimentConfig c = default_experiment_config("triangle");
  const PerturbationFamily odd = [](const GridSpec& freq) {
    return Spectrum::sample(freq, [](std::span<const double> xi) { return xi[0] * smooth_bump(xi[0] / 0.25); });
  };
  CHECK_THROWS_AS(triangle_experiment(odd, c.sweep, c.grid()), std::invalid_argument);
}

TEST_CASE("odd component") {
  const GridSpec grid = GridSpec::cube(1, 4.0, 64);
  const SampledFunction even = SampledFunction::sample(grid, [](std::span<const double> x) { return x[0] * x[0]; });
  CHECK(odd_component_max(even) == 0.0);
  const SampledFunction odd = SampledFunction::sample(grid, [](std::span<const double> x) { return x[0]; });
  CHECK(odd_component_max(odd) > 1.0);
}

TEST_CASE("translation experiment") {
  const ExperimentConfig c = default_experiment_config("translation");
  const SampledFunction f = SampledFunction::sample(c.grid(), [](std::span<const double> x) {
    return std::exp(-std::numbers::pi * x[0] * x[0]);
  });
  const TranslationResult r = translation_experiment(f, c.sweep);
  CHECK(std::abs(r.scaling.fitted_slope - 1.0) <= 0.05);
  CHECK(r.max_identity_error <= 1e-8);
  CHECK(r.max_term_modulus <= 1e-10);
  CHECK(r.max_modulus_mismatch <= 1e-12);
  CHECK(r.pass());

  // eps = 0 contributes a zero observable, which the fit skips
  std::vector<double> with_zero = c.sweep;
  with_zero.insert(with_zero.begin(), 0.0);
  const TranslationResult z = translation_experiment(f, with_zero);
  CHECK(z.scaling.fitted_slope == doctest::Approx(r.scaling.fitted_slope).epsilon(1e-12));
}

TEST_CASE("spectral tail experiment") {
  const std::vector<std::pair<int, int>> cases = {{2, 1}, {4, 1}, {3, 2}};
  for (const auto& [k, n] : cases) {
    const ExperimentConfig c = default_experiment_config("tail", k, n);
    const ScalingResult r = tail_experiment(TailParams{k, n}, c.sweep, c.grid());
    INFO("k=" << k << " n=" << n << " slope=" << r.fitted_slope);
    CHECK(r.expected_slope == doctest::Approx(2.0 - static_cast<double>(n) / k));
    CHECK(std::abs(r.fitted_slope - r.expected_slope) <= 0.1);
    CHECK(r.pass);
  }
  const ExperimentConfig c = default_experiment_config("tail");
  CHECK_THROWS_AS(tail_experiment(TailParams{1, 1}, c.sweep, c.grid()), HypothesisViolation);
}

TEST_CASE("tail spectrum") {
  const GridSpec freq = GridSpec::with_frequency_extent(1, 4.0, 64).dual();
  const Spectrum s = tail_spectrum(TailParams{2, 1}, freq);
  std::vector<double> xi(1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    freq.coordinates(k, xi);
    CHECK(s[k].real() == doctest::Approx(1.0 / (1.0 + xi[0] * xi[0])));
  }
}
