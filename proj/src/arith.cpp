#include "divsum/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "divsum/errors.hpp"
#include "divsum/periodic.hpp"

namespace divsum {

namespace {
// 12 bytes/entry (count + prefix sum); keeps the largest sieve near 1 GB.
constexpr std::uint64_t kMaxSieveLimit = 100'000'000;
}  // namespace

DivisorSieve::DivisorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("DivisorSieve: limit must be >= 1");
  if (limit > kMaxSieveLimit) {
    throw resource_error("DivisorSieve: limit " + std::to_string(limit) +
                         " exceeds memory budget (max " +
                         std::to_string(kMaxSieveLimit) + ")");
  }
  counts_.assign(limit + 1, 0);
  for (std::uint64_t m = 1; m <= limit; ++m) {
    for (std::uint64_t k = m; k <= limit; k += m) counts_[k] += 1;
  }
  summatory_.assign(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    summatory_[n] = summatory_[n - 1] + counts_[n];
  }
}

std::uint32_t DivisorSieve::count(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::out_of_range("DivisorSieve::count: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit_) + "]");
  }
  return counts_[n];
}

std::uint64_t DivisorSieve::summatory(std::uint64_t n) const {
  if (n > limit_) {
    throw std::out_of_range("DivisorSieve::summatory: n = " + std::to_string(n) +
                            " exceeds sieve limit " + std::to_string(limit_));
  }
  return summatory_[n];
}

std::uint32_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  std::uint32_t total = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    total *= e + 1;
  }
  if (n > 1) total *= 2;
  return total;
}

std::uint32_t divisor_count(std::uint64_t n, const DivisorSieve& sieve) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  if (n <= sieve.limit()) return sieve.count(n);
  return divisor_count(n);
}

std::uint64_t divisor_summatory(double x, const DivisorSieve& sieve) {
  if (!(x >= 0.0)) throw std::invalid_argument("divisor_summatory: x must be >= 0");
  const double fx = std::floor(x);
  if (fx > double(sieve.limit())) {
    throw std::out_of_range("divisor_summatory: x exceeds sieve limit " +
                            std::to_string(sieve.limit()));
  }
  return sieve.summatory(static_cast<std::uint64_t>(fx));
}

double harmonic_sum(double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("harmonic_sum: x must be >= 1");
  return harmonic_sum_t<double>(x);
}

HarmonicExpansion harmonic_expansion(double x) {
  if (!(x >= 2.0)) throw std::invalid_argument("harmonic_expansion: x must be >= 2");
  HarmonicExpansion h;
  h.x = x;
  h.sum = harmonic_sum(x);
  const double rem = h.sum - std::log(x) - kEulerGamma;
  h.gamma1 = x * rem;
  h.gamma2 = x * x * (rem + psi(x) / x);
  return h;
}

}  // namespace divsum
