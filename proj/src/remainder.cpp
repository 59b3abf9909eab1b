#include "divsum/remainder.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "divsum/kahan.hpp"
#include "divsum/periodic.hpp"

namespace divsum {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::int64_t default_truncation(int m) {
  const std::int64_t base = 1000;
  const std::int64_t rounded = ((base + m - 1) / m) * m;
  return rounded < base ? base : rounded;
}

// Coefficient of sin(2 pi r x / m) in the corrected integer formula, i.e.
// (1/pi) * [1/r - 2r sum_v 1/(m^2 v^2 - r^2)] = (1/m) cot(pi r / m).
double trig_coeff(int r, int m, TrigMode mode, std::int64_t V) {
  if (mode == TrigMode::kCotangent) return cot_closed(r, m) / kPi;
  return cot_partial_fraction(r, m, V > 0 ? V : default_truncation(m)) / kPi;
}

double a_trig_from_coeffs(std::uint64_t x, const std::vector<std::vector<double>>& coeff) {
  const std::uint64_t M = isqrt_floor(double(x));
  KahanAccumulator<> acc;
  for (std::uint64_t m = 1; m <= M; ++m) {
    if (x % m == 0) {
      acc.add(1.0);  // -2 psi(x/m) = -2 * (-1/2) when m | x
      continue;
    }
    const auto& row = coeff[m];
    for (std::uint64_t r = 1; r < m; ++r) {
      const std::uint64_t s = (r * x) % m;
      acc.add(std::sin(2 * kPi * double(s) / double(m)) * row[r]);
    }
  }
  return acc.total();
}

}  // namespace

std::uint64_t isqrt_floor(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("isqrt_floor: x must be >= 0");
  auto M = static_cast<std::uint64_t>(std::sqrt(x));
  while (double(M + 1) * double(M + 1) <= x) ++M;
  while (M > 0 && double(M) * double(M) > x) --M;
  return M;
}

double main_term(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("main_term: x must be > 0");
  return x * std::log(x) + (2 * kEulerGamma - 1) * x + 0.25;
}

double delta_direct(double x, const DivisorSieve& sieve) {
  return double(divisor_summatory(x, sieve)) - main_term(x);
}

double A_of(double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("A_of: x must be >= 1");
  const std::uint64_t M = isqrt_floor(x);
  KahanAccumulator<> acc;
  for (std::uint64_t m = 1; m <= M; ++m) acc.add(psi(x / double(m)));
  return -2.0 * acc.total();
}

double B_of(double x, double tol) {
  if (!(x >= 1.0)) throw std::invalid_argument("B_of: x must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("B_of: tol must be > 0");
  const double sx = std::sqrt(x);
  const auto tail = psi2_tail_integral(sx, tol / (8.0 * x));
  const double p = psi(sx);
  return 4.0 * x * tail.value - p * p - 2.0 * psi_r(sx, 2);
}

RemainderBreakdown decompose(double x, const DivisorSieve& sieve, double tol) {
  RemainderBreakdown r;
  r.x = x;
  r.D = divisor_summatory(x, sieve);
  r.main_term = main_term(x);
  r.delta = double(r.D) - r.main_term;
  r.A = A_of(x);
  r.B = B_of(x, tol);
  r.residual = r.delta - r.A - r.B;
  return r;
}

double A_trig_integer(std::uint64_t x, TrigMode mode, std::int64_t V) {
  if (x < 1) throw std::invalid_argument("A_trig_integer: x must be >= 1");
  const std::uint64_t M = isqrt_floor(double(x));
  std::vector<std::vector<double>> coeff(M + 1);
  for (std::uint64_t m = 2; m <= M; ++m) {
    if (x % m == 0) continue;
    coeff[m].assign(m, 0.0);
    for (std::uint64_t r = 1; r < m; ++r) {
      coeff[m][r] = trig_coeff(int(r), int(m), mode, V);
    }
  }
  return a_trig_from_coeffs(x, coeff);
}

double A_trig_sweep_max_dev(std::uint64_t xmin, std::uint64_t xmax, TrigMode mode) {
  if (xmin < 1 || xmax < xmin) {
    throw std::invalid_argument("A_trig_sweep_max_dev: need 1 <= xmin <= xmax");
  }
  const std::uint64_t M = isqrt_floor(double(xmax));
  std::vector<std::vector<double>> coeff(M + 1);
  for (std::uint64_t m = 2; m <= M; ++m) {
    coeff[m].assign(m, 0.0);
    for (std::uint64_t r = 1; r < m; ++r) {
      coeff[m][r] = trig_coeff(int(r), int(m), mode, 0);
    }
  }
  double max_dev = 0.0;
  for (std::uint64_t x = xmin; x <= xmax; ++x) {
    const double dev = std::fabs(a_trig_from_coeffs(x, coeff) - A_of(double(x)));
    if (dev > max_dev) max_dev = dev;
  }
  return max_dev;
}

}  // namespace divsum
