#ifndef DIVSUM_PERIODIC_HPP
#define DIVSUM_PERIODIC_HPP

#include <cstdint>

#include "divsum/real128.hpp"

namespace divsum {

// psi(u) = u - [u] - 1/2, the sawtooth; value in [-1/2, 1/2).
inline double psi(double u) { return u - std::floor(u) - 0.5; }

template <class T>
T psi_t(T u) {
  return u - rfloor(u) - T(1) / T(2);
}

// psi_r(u) = B_r({u}) / r! for 1 <= r <= 8 (periodized Bernoulli polynomial).
// d/du psi_r = psi_{r-1}; psi_1 coincides with psi everywhere.
double psi_r(double u, int r);

// Real part of the truncated Fourier series -sum_{1<=|n|<=V} e^{2 pi i n u}/(2 pi i n)^r.
// The Bernoulli-polynomial definition is authoritative; this is a cross-check
// away from integers (for r = 1 the series converges to 0 at integers, not -1/2).
double psi_r_fourier(double u, int r, std::int64_t V);

struct TailIntegralResult {
  double lower_limit;  // T
  double value;        // ~ integral_T^inf psi_2(t) / t^3 dt
  double error_bound;  // certified, <= requested tolerance
};

// integral_T^inf psi_2(t)/t^3 dt.  Integration by parts through psi_8 gives an
// O(1) evaluation once the depth-6 remainder bound clears tol; below that the
// head is summed per unit period from the exact polynomial antiderivative.
TailIntegralResult psi2_tail_integral(double T, double tol);

// 1/r - 2r * sum_{v>=1} 1/(m^2 v^2 - r^2): explicit sum to max(V, 256) plus an
// Euler-Maclaurin tail, so the result is within ~1e-13 of the infinite sum for
// every V >= 1.
double cot_partial_fraction(int r, int m, std::int64_t V);

// Closed form of the same sum: (pi/m) cot(pi r / m).
double cot_closed(int r, int m);

}  // namespace divsum

#endif
