#ifndef DIVSUM_REMAINDER_HPP
#define DIVSUM_REMAINDER_HPP

#include <cstdint>

#include "divsum/arith.hpp"

namespace divsum {

// x log x + (2 gamma - 1) x + 1/4, the smooth part of D(x).
double main_term(double x);

// Delta(x) = D(x) - main_term(x); exact D from the sieve.
double delta_direct(double x, const DivisorSieve& sieve);

// A(x) = -2 sum_{m <= sqrt(x)} psi(x/m); O(sqrt x), compensated.
double A_of(double x);

// B(x) = 4x * integral_{sqrt x}^inf psi_2(u)/u^3 du - psi(sqrt x)^2 - 2 psi_2(sqrt x),
// with the tail integral evaluated to tol/(8x) so the total error is <= tol.
double B_of(double x, double tol);

struct RemainderBreakdown {
  double x;
  std::uint64_t D;
  double main_term;
  double delta;  // D - main_term
  double A;
  double B;
  double residual;  // delta - A - B; zero in exact arithmetic
};

RemainderBreakdown decompose(double x, const DivisorSieve& sieve, double tol);

// Trigonometric form of A(x) at integer x.  The inner coefficient
// 1/r - 2r sum_v 1/(m^2 v^2 - r^2) is either summed (partial fraction, with
// truncation V per cot_partial_fraction) or replaced by its closed form
// (pi/m) cot(pi r/m); every m | x contributes exactly 1.
enum class TrigMode { kPartialFraction, kCotangent };

// V <= 0 selects the default rule V(m) = max(1000, ceil(1000/m)*m).
double A_trig_integer(std::uint64_t x, TrigMode mode, std::int64_t V = 0);

// max_{xmin <= x <= xmax} |A_trig_integer(x) - A_of(x)|, with the per-(r, m)
// coefficients computed once for the whole sweep.
double A_trig_sweep_max_dev(std::uint64_t xmin, std::uint64_t xmax, TrigMode mode);

// floor(sqrt(x)) as an integer, robust at perfect squares.
std::uint64_t isqrt_floor(double x);

}  // namespace divsum

#endif
