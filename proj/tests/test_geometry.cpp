#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phasebound/errors.hpp"
#include "phasebound/geometry.hpp"

using namespace phasebound;

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform draw from the disk |z - w| <= w/2.
cplx draw_in_disk(double w, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = 0.5 * w * std::sqrt(u(rng));
  return w + std::polar(r, 2.0 * kPi * u(rng));
}

}  // namespace

TEST_CASE("disk inequality frozen values") {
  // high-precision oracle: gap(1, 1.2 + 0.3i), RHS of the same point
  const double gap = lemma1_gap({1.0, cplx(1.2, 0.3)});
  CHECK(std::abs(gap - 0.08103654758775548) < 1e-12);
  const double lhs = 0.2 * 0.2;
  CHECK(std::abs((gap + lhs) - 0.12103654758775548) < 1e-12);

  // scaling both arguments by 2 multiplies the gap by 4
  CHECK(std::abs(lemma1_gap({2.0, cplx(2.4, 0.6)}) - 4.0 * gap) < 1e-12);

  CHECK(lemma1_gap({1.0, cplx(1.0, 0.0)}) == 0.0);
  // boundary point of the disk is admissible
  CHECK(lemma1_gap({1.0, cplx(1.5, 0.0)}) >= 0.0);
  CHECK(lemma1_gap({1.0, cplx(1.0, 0.5)}) >= 0.0);
}

TEST_CASE("disk inequality rejects inadmissible input") {
  CHECK_THROWS_AS(lemma1_gap({0.0, cplx(0.0, 0.0)}), InadmissibleInput);
  CHECK_THROWS_AS(lemma1_gap({-1.0, cplx(-1.0, 0.0)}), InadmissibleInput);
  CHECK_THROWS_AS(lemma1_gap({1.0, cplx(1.6, 0.0)}), InadmissibleInput);
  CHECK_THROWS_AS(lemma1_gap({1.0, cplx(1.0, 0.51)}), InadmissibleInput);
  CHECK_FALSE(Lemma1Input{1.0, cplx(2.0, 0.0)}.admissible());
  CHECK(Lemma1Input{1.0, cplx(1.5, 0.0)}.admissible());
}

TEST_CASE("disk inequality scan") {
  const Lemma1ScanResult tiny = lemma1_scan(2, 2);
  CHECK(std::isfinite(tiny.min_gap));
  CHECK(tiny.evaluated == 4);

  // angle_steps = 2 samples only the real axis, where the gap is (1-|z|)^2 - (1-Re z)^2 = 0
  const Lemma1ScanResult real_axis = lemma1_scan(50, 2);
  CHECK(real_axis.min_gap >= -1e-15);
  CHECK(real_axis.min_gap <= 1e-15);
  CHECK(real_axis.argmin == cplx(1.0, 0.0));

  const Lemma1ScanResult scan = lemma1_scan(500, 500);
  CHECK(scan.min_gap >= -1e-12);
  CHECK(scan.evaluated == 250000);
  CHECK(std::abs(scan.argmin - cplx(1.0, 0.0)) <= 1e-12);

  CHECK_THROWS_AS(lemma1_scan(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(lemma1_scan(10, 1), std::invalid_argument);
}

TEST_CASE("disk inequality holds on random samples") {
  const Lemma1ScanResult r = lemma1_random_search(1'000'000, 12345);
  CHECK(r.min_gap >= -1e-12);
  CHECK(r.evaluated == 1'000'000);
}

TEST_CASE("disk inequality is homogeneous of degree two") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> logu(-3.0, 3.0);
  for (int i = 0; i < 10000; ++i) {
    const double w = std::pow(10.0, logu(rng));
    const cplx z = draw_in_disk(w, rng);
    const double lambda = std::pow(10.0, logu(rng));
    if (!Lemma1Input{w, z}.admissible() || !Lemma1Input{lambda * w, lambda * z}.admissible()) continue;
    const double base = lemma1_gap({w, z});
    const double scaled = lemma1_gap({lambda * w, lambda * z});
    CHECK(std::abs(scaled - lambda * lambda * base) <= 1e-12 * lambda * lambda * w * w);
  }
}

TEST_CASE("reduced bracket is nonnegative on the half-radius disk") {
  double worst = INFINITY;
  const int steps = 1000;
  for (int i = 0; i < steps; ++i) {
    const double r = 0.5 * i / (steps - 1);
    for (int j = 0; j < steps; ++j) {
      const double t = 2.0 * kPi * j / steps;
      worst = std::min(worst, lemma1_reduced_bracket(r * std::cos(t), r * std::sin(t)));
    }
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("reduced bracket against the expanded polynomial") {
  // Exact expansion (symbolic oracle):
  //   (2 + 2x + y^2 + 2 r y^2)^2 - 4((1+x)^2 + y^2) = y^2 (bracket + 4 y^4)
  // i.e. the bracket as written omits a nonnegative 4 y^4, so it remains a
  // valid lower bound. Compared undivided to avoid cancellation at small y.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    const double r = std::hypot(x, y);
    if (r > 0.5) continue;
    const double a = 2.0 + 2.0 * x + y * y + 2.0 * r * y * y;
    const double full = a * a - 4.0 * ((1.0 + x) * (1.0 + x) + y * y);
    const double bracket = lemma1_reduced_bracket(x, y);
    CHECK(std::abs(full - y * y * (bracket + 4.0 * std::pow(y, 4))) <= 1e-14 * a * a);
  }
}

TEST_CASE("decomposition") {
  const Decomposition d = decompose(1.0, cplx(0.9, 0.05));
  CHECK(std::abs(d.a - (-0.1)) < 1e-15);
  CHECK(std::abs(d.b - 0.05) < 1e-15);
  CHECK_THROWS_AS(decompose(0.0, 1.0), InadmissibleInput);

  std::mt19937_64 rng(17);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int i = 0; i < 10000; ++i) {
    const cplx f(n(rng), n(rng));
    const cplx g(n(rng), n(rng));
    const Decomposition dec = decompose(f, g);
    const cplx unit = f / std::abs(f);
    const cplx rebuilt = f + dec.a * unit + dec.b * cplx(0.0, 1.0) * unit;
    CHECK(std::abs(rebuilt - g) <= 1e-12 * (std::abs(f) + std::abs(g)));
    CHECK(std::abs(dec.b - std::imag(std::conj(f) / std::abs(f) * g)) <= 1e-12 * std::abs(g));

    // a common rotation of both values leaves (a, b) unchanged
    const cplx rot = std::polar(1.0, angle(rng));
    const Decomposition turned = decompose(rot * f, rot * g);
    CHECK(std::abs(turned.a - dec.a) <= 1e-12 * (std::abs(f) + std::abs(g)));
    CHECK(std::abs(turned.b - dec.b) <= 1e-12 * (std::abs(f) + std::abs(g)));
  }
}

TEST_CASE("pointwise first-term estimate") {
  CHECK(pointwise_first_term_check(1.0, 1.0, 0.05) == 0.0);
  // high-precision oracle value
  CHECK(std::abs(pointwise_first_term_check(1.0, cplx(0.99, 0.04), 0.05) - 0.000304497436498151778) < 1e-15);

  CHECK_THROWS_AS(pointwise_first_term_check(0.3, 0.3, 0.05), InadmissibleInput);
  CHECK_THROWS_AS(pointwise_first_term_check(1.0, 1.2, 0.05), InadmissibleInput);
  CHECK_THROWS_AS(pointwise_first_term_check(1.0, 1.0, 0.0), InadmissibleInput);
}

TEST_CASE("pointwise first-term estimate on random admissible samples") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> logu(-4.0, 2.0);
  double worst = INFINITY;
  for (int i = 0; i < 1'000'000; ++i) {
    const double eps = std::pow(10.0, logu(rng));
    const double modulus = 10.0 * eps * (1.0 + 9.0 * u(rng));
    const cplx f = std::polar(modulus, 2.0 * kPi * u(rng));
    const cplx g = f + std::polar(eps * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    if (std::abs(f - g) > eps) continue;
    worst = std::min(worst, pointwise_first_term_check(f, g, eps) / (eps * eps));
  }
  CHECK(worst >= -1e-12);
}
