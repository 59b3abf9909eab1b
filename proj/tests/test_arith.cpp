#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "divsum/arith.hpp"
#include "divsum/errors.hpp"
#include "divsum/periodic.hpp"

using namespace divsum;

namespace {

// sum 1/n over [lo, hi] by pairwise recursion in long double
long double pairwise_harmonic(long lo, long hi) {
  if (hi - lo < 32) {
    long double s = 0;
    for (long n = lo; n <= hi; ++n) s += 1.0L / n;
    return s;
  }
  const long mid = lo + (hi - lo) / 2;
  return pairwise_harmonic(lo, mid) + pairwise_harmonic(mid + 1, hi);
}

std::uint32_t brute_divisors(std::uint64_t n) {
  std::uint32_t c = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (n % j == 0) ++c;
  }
  return c;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("sieve basics") {
  const DivisorSieve one(1);
  CHECK(one.count(1) == 1);
  const DivisorSieve s(12);
  CHECK(s.count(12) == 6);  // {1,2,3,4,6,12}
  CHECK(s.count(9) == 3);   // {1,3,9}
  CHECK(s.count(1) == 1);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) CHECK(s.count(p) == 2);
}

TEST_CASE("sieve matches trial division exhaustively") {
  const DivisorSieve s(10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    CHECK(s.count(n) == divisor_count(n));
  }
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CHECK(s.count(n) == brute_divisors(n));
  }
}

TEST_CASE("multiplicativity on random coprime pairs") {
  const DivisorSieve s(90000);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::uint64_t> pick(1, 300);
  int done = 0;
  while (done < 1000) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1) continue;
    CHECK(s.count(a * b) == s.count(a) * s.count(b));
    ++done;
  }
}

TEST_CASE("divisor_count fallback past the sieve") {
  const DivisorSieve s(100);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(104729) == 2);  // prime
  CHECK(divisor_count(720, s) == 30);
  CHECK(divisor_count(64, s) == 7);
  CHECK_THROWS_AS(divisor_count(0), std::invalid_argument);
}

TEST_CASE("summatory function") {
  const DivisorSieve s(6000);
  CHECK(divisor_summatory(0.9, s) == 0);
  CHECK(divisor_summatory(10.0, s) == 27);
  CHECK(divisor_summatory(10.7, s) == 27);  // step function
  for (std::uint64_t x = 2; x <= 5000; ++x) {
    CHECK(s.summatory(x) - s.summatory(x - 1) == s.count(x));
  }
  CHECK_THROWS_AS(divisor_summatory(6001.0, s), std::out_of_range);
  CHECK_THROWS_AS(divisor_summatory(-1.0, s), std::invalid_argument);
}

TEST_CASE("sieve resource limits") {
  CHECK_THROWS_AS(DivisorSieve(0), std::invalid_argument);
  CHECK_THROWS_AS(DivisorSieve(std::uint64_t(1) << 40), resource_error);
}

TEST_CASE("harmonic_sum values") {
  CHECK(harmonic_sum(1.0) == 1.0);
  CHECK(harmonic_sum(3.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK(harmonic_sum(3.9) == harmonic_sum(3.0));
  CHECK_THROWS_AS(harmonic_sum(0.5), std::invalid_argument);
}

TEST_CASE("harmonic_sum accuracy at 1e6 against pairwise oracle") {
  const double got = harmonic_sum(1e6);
  const long double want = pairwise_harmonic(1, 1000000);
  // contract: absolute error <= 10 eps log x
  const double bound = 10.0 * 2.220446049250313e-16 * std::log(1e6);
  CHECK(std::fabs(double(want - (long double)got)) <= bound);
}

TEST_CASE("stored Euler gamma agrees with Euler-Maclaurin tail") {
  const long double N = 10000.0L;
  const long double H = pairwise_harmonic(1, 10000);
  const long double gamma_em = H - std::log(N) - 1 / (2 * N) + 1 / (12 * N * N) -
                               1 / (120 * N * N * N * N) +
                               1 / (252 * N * N * N * N * N * N);
  CHECK(std::fabs(double(gamma_em - (long double)kEulerGamma)) <= 1e-14);
}

TEST_CASE("harmonic expansion extracts gamma1 ~ -psi") {
  // large integer x: gamma1 ~ 1/2
  const auto h = harmonic_expansion(1000.0);
  CHECK(std::fabs(h.gamma1 - 0.5) <= 1e-3);
  // x = 2.5: psi(2.5) = 0, so gamma1 itself is O(1/x)
  const auto h25 = harmonic_expansion(2.5);
  CHECK(std::fabs(h25.gamma1 + psi(2.5)) <= 1.0 / 2.5);
  CHECK(h25.sum == doctest::Approx(1.5).epsilon(1e-15));
  const auto h4 = harmonic_expansion(1e4);
  CHECK(std::fabs(h4.gamma1 + psi(1e4)) <= 1e-4);
  CHECK_THROWS_AS(harmonic_expansion(1.5), std::invalid_argument);
}

TEST_CASE("gamma1 + psi decays like C/x over a log sweep") {
  double C = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double x = std::pow(10.0, 1.0 + 5.0 * k / 200.0);
    const auto h = harmonic_expansion(x);
    C = std::max(C, x * std::fabs(h.gamma1 + psi(x)));
    CHECK(std::fabs(h.gamma2) <= 0.5);  // extracted second coefficient stays O(1)
  }
  MESSAGE("fitted C with |gamma1(x) + psi(x)| <= C/x over [10, 1e6]: C = ", C);
  CHECK(C <= 1.0);
}

}  // TEST_SUITE
