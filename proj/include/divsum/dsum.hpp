#ifndef DIVSUM_DSUM_HPP
#define DIVSUM_DSUM_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "divsum/arith.hpp"
#include "divsum/quadrature.hpp"

namespace divsum {

// A continuously differentiable f on [a, b] with its derivative, 0 < a <= b.
struct SmoothFn {
  std::function<double(double)> f;
  std::function<double(double)> df;
  double a = 0;
  double b = 0;
};

// Checks the domain and that df matches a centered finite difference of f at
// 100 interior points; throws std::invalid_argument on mismatch.
void validate(const SmoothFn& fn);

enum class TailMode { kSawtooth, kFourier };

// Term groups of the divisor-weighted summation formula
//   sum_{a<n<=b} d(n) f(n) =
//     t1: integral (log u + 2 gamma) f
//     t2: -2 integral f psi_2(sqrt u)/u
//     t3: -integral f psi(sqrt u)/sqrt(u)
//     t4: 4 integral f * (integral_{sqrt u}^inf psi_2/t^3)
//     t5: -f(b) psi^2(sqrt b) + f(a) psi^2(sqrt a)
//     t6: integral psi^2(sqrt u) f'
//     t7: 2 f(a) sum_{m<=sqrt a} psi(a/m) - 2 f(b) sum_{m<=sqrt b} psi(b/m)
//     t8: 2 sum_{m<=sqrt b} integral_{max(m^2,a)}^b psi(u/m) f'   (sawtooth)
//         or the truncated Fourier form of the same term          (fourier)
struct Theorem2Breakdown {
  double t1, t2, t3, t4, t5, t6, t7, t8;
  double rhs_total;
  double lhs;
  double residual;  // lhs - rhs_total
};

// Exact left-hand side sum_{a < n <= b} d(n) f(n).
double lhs_divisor_sum(const SmoothFn& fn, const DivisorSieve& sieve);

// Full right-hand side; integrals split at their discontinuities (squares of
// integers for the sqrt-u terms, multiples of m inside t8).
Theorem2Breakdown rhs_theorem2(const SmoothFn& fn, const DivisorSieve& sieve,
                               const QuadConfig& cfg, TailMode tail_mode);

struct Theorem2Report {
  Theorem2Breakdown sawtooth;
  Theorem2Breakdown fourier;
  double t8_gap;  // sawtooth t8 - fourier t8
};

Theorem2Report verify_theorem2(const SmoothFn& fn, const DivisorSieve& sieve,
                               const QuadConfig& cfg);

// Registered test functions: "one", "id", "inv", "log", "expdecay".
SmoothFn make_test_function(std::string_view name, double a, double b);
std::vector<std::string> test_function_names();

// S_V(t) = sum_{v=1}^{V} sin(2 pi v t)/v, the truncated sawtooth series used
// by the Fourier tail mode.  Direct summation near integers, an Abel-summed
// tail expansion of sum_{v>V} z^v/v elsewhere.
class FourierSawtoothSum {
 public:
  explicit FourierSawtoothSum(int V);
  double operator()(double t) const;
  int truncation() const { return v_; }

 private:
  double direct(double frac) const;
  double asymptotic(double frac) const;

  int v_;
  std::vector<double> inv_;
};

}  // namespace divsum

#endif
