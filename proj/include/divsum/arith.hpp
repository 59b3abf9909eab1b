#ifndef DIVSUM_ARITH_HPP
#define DIVSUM_ARITH_HPP

#include <cstdint>
#include <vector>

#include "divsum/kahan.hpp"
#include "divsum/real128.hpp"

namespace divsum {

inline constexpr double kEulerGamma = 0.5772156649015328606;

// Table of d(n) for 1 <= n <= limit, with prefix sums for D(x) lookups.
// Immutable after construction; safe to share across threads.
class DivisorSieve {
 public:
  explicit DivisorSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t count(std::uint64_t n) const;      // d(n), 1 <= n <= limit
  std::uint64_t summatory(std::uint64_t n) const;  // D(n), 0 <= n <= limit

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> summatory_;
};

// d(n) by trial-division factorization; total on n >= 1.
std::uint32_t divisor_count(std::uint64_t n);
// Sieve lookup when n <= limit, trial division otherwise.
std::uint32_t divisor_count(std::uint64_t n, const DivisorSieve& sieve);

// D(x) = sum_{n <= x} d(n); throws std::out_of_range past the sieve.
std::uint64_t divisor_summatory(double x, const DivisorSieve& sieve);

// sum_{n <= x} 1/n, compensated.
double harmonic_sum(double x);

template <class T>
T harmonic_sum_t(double x) {
  KahanAccumulator<T> acc;
  const std::int64_t n_max = static_cast<std::int64_t>(rfloor(x));
  for (std::int64_t n = 1; n <= n_max; ++n) acc.add(T(1) / T(double(n)));
  return acc.total();
}

// Remainder coefficients of sum_{n<=x} 1/n = log x + gamma + g1(x)/x + g2(x)/x^2 + ...
// gamma1 is extracted directly from the finite sum; gamma2 removes the known
// leading coefficient gamma1(x) = -psi(x) first (extracting it from the
// stored gamma1 would collapse to zero identically).
struct HarmonicExpansion {
  double x;
  double sum;
  double gamma1;
  double gamma2;
};

HarmonicExpansion harmonic_expansion(double x);  // requires x >= 2

}  // namespace divsum

#endif
