#include <doctest.h>

#include <cmath>
#include <random>

#include "divsum/errors.hpp"
#include "divsum/kahan.hpp"
#include "divsum/periodic.hpp"

using namespace divsum;

namespace {

// Test-local psi_2 and tail-integral oracle, independent of the library path:
// composite Simpson (256 panels) on each unit period plus the absolute bound
// 1/(24 T^2) for what is dropped past `upto`.
double local_psi2(double t) {
  const double s = t - std::floor(t);
  return (s * s - s + 1.0 / 6.0) / 2.0;
}

double simpson_panel(double lo, double hi) {
  const int n = 256;  // even
  const double h = (hi - lo) / n;
  auto f = [](double t) { return local_psi2(t) / (t * t * t); };
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double oracle_tail(double T, long upto = 20000) {
  KahanAccumulator<> acc;
  double lo = T;
  double hi = std::floor(T) + 1.0;
  if (hi > lo) acc.add(simpson_panel(lo, std::min(hi, double(upto))));
  for (double k = hi; k < double(upto); k += 1.0) acc.add(simpson_panel(k, k + 1));
  return acc.total();
}

// oracle error: Simpson truncation (~3e-10 summed) + dropped tail
double oracle_slack(long upto = 20000) { return 5e-10 + 1.0 / (24.0 * double(upto) * double(upto)); }

// Antiderivative of (s^2 - s + 1/6)/(2 (k+s)^3) at w = k+s, for the
// single-period difference checks.
double antider(double k, double w) {
  return 0.5 * std::log(w) + (2 * k + 1) / (2 * w) - (k * k + k + 1.0 / 6.0) / (4 * w * w);
}

constexpr double kGamma = 0.5772156649015328606;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("periodic") {

TEST_CASE("psi sawtooth values") {
  CHECK(psi(0.25) == -0.25);
  CHECK(psi(7.0) == -0.5);
  CHECK(psi(2.5) == 0.0);
  CHECK(psi(-0.25) == 0.25);  // floor convention for negatives
  CHECK(psi(0.0) == -0.5);
}

TEST_CASE("psi_r anchor values") {
  CHECK(psi_r(0.0, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(psi_r(0.5, 2) == doctest::Approx(-1.0 / 24.0).epsilon(1e-15));
  CHECK(psi_r(0.3, 1) == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK_THROWS_AS(psi_r(0.3, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi_r(0.3, 9), std::invalid_argument);
}

TEST_CASE("psi_r(., 1) coincides with psi") {
  for (double u : {0.0, 0.125, 0.5, 0.875, 3.0, 7.25, -1.75}) {
    CHECK(psi_r(u, 1) == doctest::Approx(psi(u)).epsilon(1e-16));
  }
}

TEST_CASE("psi has zero mean (midpoint rule)") {
  const int n = 10000;
  KahanAccumulator<> acc;
  for (int k = 0; k < n; ++k) acc.add(psi((k + 0.5) / n));
  CHECK(std::fabs(acc.total() / n) <= 1e-15);
}

TEST_CASE("psi_r periodicity is exact on representable shifts") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    // 30-bit grid so that u+1 is exactly representable
    const double u = std::floor(unif(rng) * (1 << 30)) / double(1 << 30);
    for (int r = 1; r <= 8; ++r) {
      CHECK(psi_r(u + 1.0, r) == psi_r(u, r));
    }
  }
}

TEST_CASE("derivative chain psi_r' = psi_{r-1}") {
  const double h = 1e-5;
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int r : {2, 3, 4}) {
    for (int i = 0; i < 200; ++i) {
      const double u = 3.0 + unif(rng);
      const double fd = (psi_r(u + h, r) - psi_r(u - h, r)) / (2 * h);
      CHECK(std::fabs(fd - psi_r(u, r - 1)) <= 1e-8);
    }
  }
}

TEST_CASE("Fourier series converges to the polynomial definition") {
  // alternating tail at u = 1/2 is ~1/(4 pi^2 V^2)
  CHECK(std::fabs(psi_r_fourier(0.5, 2, 1000) - (-1.0 / 24.0)) <= 1e-7);
  CHECK(std::fabs(psi_r_fourier(0.5, 2, 4000) - (-1.0 / 24.0)) <= 1e-8);
  // r = 1 converges like 1/V
  CHECK(std::fabs(psi_r_fourier(0.25, 1, 100000) - (-0.25)) <= 1e-4);
  // r = 2 is continuous at integers; the series tends to +1/12
  CHECK(std::fabs(psi_r_fourier(0.0, 2, 4000) - 1.0 / 12.0) <= 2e-5);
  CHECK(std::fabs(psi_r_fourier(0.0, 2, 40000) - 1.0 / 12.0) <= 2e-6);
}

TEST_CASE("Fourier consistency for r = 2, 3 at random points") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unif(0.001, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const double u = unif(rng);
    CHECK(std::fabs(psi_r_fourier(u, 2, 10000) - psi_r(u, 2)) <= 1e-6);
    CHECK(std::fabs(psi_r_fourier(u, 3, 10000) - psi_r(u, 3)) <= 1e-6);
  }
}

TEST_CASE("tail integral against the Simpson oracle") {
  for (double T : {1.0, 2.0, 7.3, 16.0, 100.25}) {
    const auto r = psi2_tail_integral(T, 1e-12);
    CHECK(r.lower_limit == T);
    CHECK(r.error_bound <= 1e-12);
    CHECK(std::fabs(r.value - oracle_tail(T)) <= oracle_slack() + 1e-12);
  }
  // indicative magnitude from the operation examples
  CHECK(psi2_tail_integral(2.0, 1e-12).value == doctest::Approx(2.3524e-4).epsilon(1e-3));
}

TEST_CASE("tail integral closes the x = 1 decomposition loop") {
  // 4*I(1) - 1/4 - 1/6 = 3/4 - 2 gamma forces I(1) = 7/24 - gamma/2
  const auto r = psi2_tail_integral(1.0, 1e-13);
  CHECK(std::fabs(r.value - (7.0 / 24.0 - kGamma / 2.0)) <= 5e-13);
}

TEST_CASE("integer step differences equal the closed-form period integral") {
  for (double k : {2.0, 9.0, 20.0, 31.0}) {
    const double got =
        psi2_tail_integral(k, 1e-13).value - psi2_tail_integral(k + 1, 1e-13).value;
    const double want = antider(k, k + 1) - antider(k, k);
    CHECK(std::fabs(got - want) <= 1e-13);
  }
}

TEST_CASE("tail integral scaling T^2 |I(T)| <= 1/24") {
  for (int i = 0; i <= 1000; ++i) {
    const double T = std::pow(10.0, 4.0 * i / 1000.0);
    const auto r = psi2_tail_integral(T, 1e-12);
    CHECK(T * T * std::fabs(r.value) <= 1.0 / 24.0 + T * T * 1e-12);
    CHECK(std::fabs(r.value) <= 1.0 / (24.0 * T * T) + 1e-12);
  }
}

TEST_CASE("tail integral error handling") {
  CHECK_THROWS_AS(psi2_tail_integral(2.0, 1e-18), tolerance_error);
  CHECK_THROWS_AS(psi2_tail_integral(-1.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(psi2_tail_integral(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("cotangent partial fraction telescopes at (1, 2)") {
  CHECK(std::fabs(cot_partial_fraction(1, 2, 1000)) <= 1e-12);
  CHECK(cot_closed(1, 2) == 0.0);
}

TEST_CASE("cotangent closed values") {
  CHECK(cot_closed(1, 4) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(cot_closed(3, 4) == doctest::Approx(-kPi / 4.0).epsilon(1e-15));
}

TEST_CASE("partial fraction converges to the closed cotangent form") {
  for (int m = 2; m <= 20; ++m) {
    const std::int64_t V = 1000000 / m;
    for (int r = 1; r < m; ++r) {
      CHECK(std::fabs(cot_partial_fraction(r, m, V) - cot_closed(r, m)) <= 1e-12);
    }
  }
  // small V still lands within 1e-12 of the infinite sum (internal floor + tail)
  CHECK(std::fabs(cot_partial_fraction(3, 7, 1) - cot_closed(3, 7)) <= 1e-12);
}

TEST_CASE("cotangent antisymmetry r <-> m - r") {
  for (int m : {5, 8, 13}) {
    for (int r = 1; r < m; ++r) {
      CHECK(cot_closed(m - r, m) == doctest::Approx(-cot_closed(r, m)).epsilon(1e-14));
      CHECK(cot_partial_fraction(m - r, m, 5000) ==
            doctest::Approx(-cot_partial_fraction(r, m, 5000)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cotangent argument errors") {
  CHECK_THROWS_AS(cot_partial_fraction(0, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(cot_partial_fraction(5, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(cot_partial_fraction(1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(cot_closed(4, 4), std::invalid_argument);
}

}  // TEST_SUITE
