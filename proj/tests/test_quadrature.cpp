#include <doctest.h>

#include <cmath>
#include <vector>

#include "divsum/periodic.hpp"
#include "divsum/quadrature.hpp"

using namespace divsum;

TEST_SUITE("quadrature") {

TEST_CASE("exact on constants and low-degree polynomials") {
  QuadConfig cfg;
  CHECK(quad_with_breakpoints([](double) { return 3.25; }, 2.0, 7.0, {}, cfg) ==
        doctest::Approx(3.25 * 5.0).epsilon(1e-15));
  CHECK(quad_with_breakpoints([](double u) { return u * u; }, 0.0, 1.0, {}, cfg) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  // degree 13 is inside the Gauss-7 exactness range: no subdivision needed
  CHECK(quad_adaptive([](double u) { return std::pow(u, 13); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 14.0).epsilon(1e-14));
}

TEST_CASE("smooth integrand against a closed form") {
  QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  const double got = quad_with_breakpoints([](double u) { return std::exp(-u); },
                                           0.0, 5.0, {}, cfg);
  CHECK(got == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-13));
}

TEST_CASE("piecewise sawtooth with breakpoints at squares") {
  // integral of psi(sqrt u) du on [3.5, 10.5]; antiderivative per piece
  // with k <= sqrt(u) < k+1 is (2/3) u^{3/2} - (k + 1/2) u.
  auto piece = [](double k, double lo, double hi) {
    auto F = [&](double u) { return (2.0 / 3.0) * std::pow(u, 1.5) - (k + 0.5) * u; };
    return F(hi) - F(lo);
  };
  const double want = piece(1, 3.5, 4.0) + piece(2, 4.0, 9.0) + piece(3, 9.0, 10.5);
  QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  const std::vector<double> bps{4.0, 9.0};
  const double got = quad_with_breakpoints(
      [](double u) { return psi(std::sqrt(u)); }, 3.5, 10.5, bps, cfg);
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("breakpoints outside the interval are ignored") {
  QuadConfig cfg;
  const std::vector<double> bps{-5.0, 0.5, 99.0};
  CHECK(quad_with_breakpoints([](double u) { return u; }, 1.0, 2.0, bps, cfg) ==
        doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("degenerate interval integrates to zero") {
  QuadConfig cfg;
  CHECK(quad_with_breakpoints([](double u) { return u; }, 2.0, 2.0, {}, cfg) == 0.0);
}

TEST_CASE("relative tolerance with large magnitudes") {
  const double got = quad_adaptive([](double u) { return 1e9 * std::cos(u); }, 0.0,
                                   1.0, 0.0, 1e-12, 50);
  CHECK(got == doctest::Approx(1e9 * std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("max depth exceeded names the offending interval") {
  // integrable endpoint singularity, but the depth budget is tiny
  CHECK_THROWS_AS(quad_adaptive([](double u) { return 1.0 / std::sqrt(u); }, 0.0,
                                1.0, 1e-13, 0.0, 6),
                  tolerance_error);
  try {
    quad_adaptive([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0, 1e-13, 0.0, 6);
  } catch (const tolerance_error& e) {
    CHECK(std::string(e.what()).find("[") != std::string::npos);
  }
}

TEST_CASE("jump inside a piece is still resolved when within depth") {
  // no breakpoint given: adaptivity alone must find the step
  QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  const double got = quad_adaptive(
      [](double u) { return u < 1.0 ? 0.0 : 1.0; }, 0.0, 3.0, 1e-10, 0.0, 50);
  CHECK(got == doctest::Approx(2.0).epsilon(1e-9));
}

}  // TEST_SUITE
