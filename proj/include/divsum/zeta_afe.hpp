#ifndef DIVSUM_ZETA_AFE_HPP
#define DIVSUM_ZETA_AFE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "divsum/arith.hpp"
#include "divsum/kahan.hpp"
#include "divsum/real128.hpp"

namespace divsum {

namespace zeta_detail {

// Bernoulli numbers B_2 ... B_18 as rationals.
inline constexpr double kBernNum[9] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867};
inline constexpr double kBernDen[9] = {6, 30, 42, 30, 66, 2730, 6, 510, 798};

// Magnitude of the first omitted Euler-Maclaurin correction (order K+1);
// bounds the truncation error for real s > 0.
inline double em_next_term_bound(double s, int K, double N) {
  double poch = s;
  for (int j = 1; j <= 2 * K; ++j) poch *= s + j;
  double fact = 1.0;
  for (int j = 2; j <= 2 * K + 2; ++j) fact *= j;
  return std::fabs(kBernNum[K] / kBernDen[K]) / fact * poch *
         std::pow(N, -s - 2 * K - 1);
}

inline void check_s(double s) {
  if (s == 1.0) throw std::domain_error("zeta_real: pole at s = 1");
  if (!(s > 0.0)) throw std::domain_error("zeta_real: requires s > 0 (real-s scope)");
}

}  // namespace zeta_detail

// zeta(s) for real s > 0, s != 1, by Euler-Maclaurin summation:
//   sum_{n<=N} n^-s + N^{1-s}/(s-1) - N^-s/2
//   + sum_{k<=K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}.
// N = 0 picks the smallest power of two whose truncation bound clears the
// scalar's target (1e-15 for double, 1e-31 for real128).
template <class T>
T zeta_real_t(double s, int K = 6, std::int64_t N = 0) {
  zeta_detail::check_s(s);
  if (K < 1 || K > 8) throw std::invalid_argument("zeta_real: K must be in [1, 8]");
  if (N <= 0) {
    N = 16;
    while (N < (std::int64_t(1) << 22) &&
           zeta_detail::em_next_term_bound(s, K, double(N)) >
               FloatTraits<T>::eps_target()) {
      N *= 2;
    }
  }
  const T s_t = T(s);
  const T one = T(1);
  KahanAccumulator<T> acc;
  for (std::int64_t n = 1; n <= N; ++n) acc.add(rpow(T(double(n)), -s_t));
  const T NT = T(double(N));
  T val = acc.total() + rpow(NT, one - s_t) / (s_t - one) - rpow(NT, -s_t) / T(2);
  T poch = s_t;
  T npow = rpow(NT, -s_t - one);
  T fact = T(2);
  for (int k = 1; k <= K; ++k) {
    if (k > 1) {
      poch *= (s_t + T(2 * k - 3)) * (s_t + T(2 * k - 2));
      fact *= T(2 * k - 1) * T(2 * k);
      npow /= NT * NT;
    }
    val += T(zeta_detail::kBernNum[k - 1]) / T(zeta_detail::kBernDen[k - 1]) /
           fact * poch * npow;
  }
  return val;
}

double zeta_real(double s, int K = 6, std::int64_t N = 0);

// sum_{n <= x} n^{-s}, compensated.
template <class T>
T power_sum_t(double x, double s) {
  const auto n_max = static_cast<std::int64_t>(rfloor(double(x)));
  const T ms = T(-s);
  KahanAccumulator<T> acc;
  for (std::int64_t n = 1; n <= n_max; ++n) acc.add(rpow(T(double(n)), ms));
  return acc.total();
}

// sum_{n <= x} d(n) n^{-s}, compensated.
template <class T>
T divisor_power_sum_t(double x, double s, const DivisorSieve& sieve) {
  const auto n_max = static_cast<std::int64_t>(rfloor(double(x)));
  if (n_max > std::int64_t(sieve.limit())) {
    throw std::out_of_range("divisor_power_sum: x exceeds sieve limit");
  }
  const T ms = T(-s);
  KahanAccumulator<T> acc;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    acc.add(T(double(sieve.count(std::uint64_t(n)))) * rpow(T(double(n)), ms));
  }
  return acc.total();
}

// Tails of the real-s approximate functional equations:
//   zeta(s)   = sum_{n<=x} n^-s        + E1(s, x)
//   zeta(s)^2 = sum_{n<=x} d(n) n^-s   + E2(s, x)
double E1(double s, double x);
double E1_asymptotic(double s, double x);  // x^{1-s}/(s-1) + x^{-s} psi(x)
double E2(double s, double x, const DivisorSieve& sieve);

// Exact hyperbola-method identity:
//   E2(s, x) = 2 sum_{n<=sqrt x} n^-s E1(s, x/n) + E1(s, sqrt x)^2.
double hyperbola_identity_rhs(double s, double x, const DivisorSieve& sieve);

// (2 x^{1-s}/(s-1)) sum_{n<=sqrt x} 1/n - x^{-s} Delta(x) + E1(s, sqrt x)^2;
// Delta comes from the exact direct form so the residual measures only the
// O(s x^{-s}) tail of the relation.
double theorem3_rhs(double s, double x, const DivisorSieve& sieve);

struct AfeRecord {
  double s;
  double x;
  double E1;
  double E2;
  double hyperbola_residual;  // E2 - hyperbola rhs (floating error only)
  double theorem3_residual;   // E2 - theorem3 rhs
  double scaled_residual;     // theorem3_residual * x^s / s
};

AfeRecord afe_record(double s, double x, const DivisorSieve& sieve);

// Extended-precision residual sweep over an ascending x grid for one s; the
// power sums are accumulated incrementally across the grid.
struct AfeScalingPoint {
  double x;
  double theorem3_residual;     // E2 - theorem3 rhs
  double e1_residual;           // E1 - E1_asymptotic
  double scaled_theorem3;       // |theorem3_residual| * x^s / s
  double scaled_e1;             // |e1_residual| * x^{s+1} / s
};

std::vector<AfeScalingPoint> afe_scaling_sweep(double s,
                                               std::span<const double> xs,
                                               const DivisorSieve& sieve);

// Least-squares slope of log10|y| against log10 x.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace divsum

#endif
