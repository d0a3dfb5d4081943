#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "glasner/bump.hpp"

using namespace glasner;

TEST_CASE("bump coefficients: normalization, symmetry, range") {
  const BumpFunction g = build_bump(0.1, 2000);
  CHECK(g.coefficient(0) == 1.0);
  CHECK(g.coefficient(-17) == g.coefficient(17));
  for (int64_t m = 0; m <= g.m_max; ++m) {
    CHECK(g.coefficient(m) >= 0.0);
    CHECK(g.coefficient(m) <= 1.0);
  }
  CHECK_THROWS_AS(g.coefficient(2001), std::out_of_range);
  double total = 0.0;
  for (double w : g.widths) total += w;
  CHECK(total == doctest::Approx(0.1).epsilon(1e-12));  // support within [-eps, eps]
  CHECK_THROWS_AS(build_bump(0.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(build_bump(1.0, 100), std::invalid_argument);
}

TEST_CASE("decay certificate: fitted constant is small") {
  const BumpFunction g = build_bump(0.1, 10000);
  const double c = fit_decay_constant(g);
  CHECK(std::isfinite(c));
  CHECK(c >= 1.0);  // m = 0 forces at least 1
  CHECK(c <= 1000.0);
  for (int64_t m = 0; m <= g.m_max; m += 97)
    CHECK(g.coefficient(m) <= c * std::exp(-std::sqrt(g.eps * static_cast<double>(m))) * (1 + 1e-12));
}

TEST_CASE("eval: support, mean, nonnegativity up to truncation") {
  const BumpFunction g = build_bump(0.1, 2000);
  const BumpEval outside = eval_bump(g, 0.4);
  CHECK(std::fabs(outside.value) <= outside.truncation_bound + 1e-9);

  // integral over one period is the mean coefficient: trapezoid on the grid
  const int n = 4000;
  double integral = 0.0;
  double min_value = 1e9;
  for (int i = 0; i < n; ++i) {
    const double t = -0.5 + static_cast<double>(i) / n;
    const double v = eval_bump(g, t).value;
    integral += v / n;
    min_value = std::min(min_value, v);
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(min_value >= -(outside.truncation_bound + 1e-9));

  CHECK_THROWS_AS(eval_bump(g, 0.5), std::invalid_argument);
}

TEST_CASE("l2 mass: lower bound, degenerate indicator, scaling") {
  const BumpFunction g = build_bump(0.1, 4000);
  const L2Mass l2 = l2_mass(g);
  CHECK(l2.value >= 1.0);

  // single indicator of width w: integral of g^2 is exactly 1/w
  const BumpFunction box = build_bump_from_widths({0.25}, 200000);
  const L2Mass box_l2 = l2_mass(box);
  CHECK(std::fabs(box_l2.value - 4.0) <= box_l2.tail_bound + 1e-9);

  // eps * l2 stays within a factor of 2 across the schedule
  std::array<double, 4> schedule = {0.2, 0.1, 0.05, 0.025};
  double lo = 1e300, hi = 0.0;
  for (double eps : schedule) {
    const BumpFunction b = build_bump(eps, 4000);
    const double scaled = eps * l2_mass(b).value;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(hi / lo <= 2.0);
}

TEST_CASE("parseval consistency with a quadrature of eval^2") {
  const BumpFunction g = build_bump(0.2, 3000);
  const int n = 6000;
  double integral = 0.0;
  for (int i = 0; i < n; ++i)
    integral += std::pow(eval_bump(g, -0.5 + static_cast<double>(i) / n).value, 2) / n;
  const L2Mass l2 = l2_mass(g);
  CHECK(integral == doctest::Approx(l2.value).epsilon(1e-4));
}

TEST_CASE("tensor coefficients multiply coordinatewise") {
  const BumpFunction g = build_bump(0.1, 500);
  const std::array<int64_t, 3> zero = {0, 0, 0};
  CHECK(tensor_coefficient(g, zero) == 1.0);
  const std::array<int64_t, 2> mixed = {37, 0};
  CHECK(tensor_coefficient(g, mixed) == g.coefficient(37));
  const std::array<int64_t, 2> big = {501, 0};
  CHECK_THROWS_AS(tensor_coefficient(g, big), std::out_of_range);
}

TEST_CASE("truncation threshold formula") {
  CHECK(truncation_threshold(0.01) == 8483);
  CHECK(truncation_threshold(std::exp(-1.0)) == 10);
  for (double eps : {0.3, 0.2, 0.1, 0.05})
    CHECK(truncation_threshold(eps / 2) > truncation_threshold(eps));
  CHECK_THROWS_AS(truncation_threshold(0.5), std::invalid_argument);
  CHECK_THROWS_AS(truncation_threshold(0.0), std::invalid_argument);
}

TEST_CASE("frequency tail beyond the truncation threshold is tiny") {
  for (double eps : {0.2, 0.1, 0.05}) {
    const BumpFunction g = build_bump(eps, 10000);
    const int64_t T = truncation_threshold(eps);
    REQUIRE(T <= g.m_max);
    for (int n = 1; n <= 2; ++n) CHECK(bump_tail_sum(g, T, n) < 0.5);
  }
}

TEST_CASE("eps1 thresholds are positive and shrink with dimension") {
  double prev = 1.0;
  for (int n = 1; n <= 4; ++n) {
    const double e1 = eps1_threshold(n);
    CHECK(e1 > 0.0);
    CHECK(e1 <= prev);
    prev = e1;
  }
}
