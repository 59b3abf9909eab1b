#include "divsum/periodic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "divsum/errors.hpp"
#include "divsum/kahan.hpp"

namespace divsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bernoulli polynomial coefficients, ascending powers, as exact rationals.
struct Rational {
  long long num;
  long long den;
};

constexpr Rational kBernoulliPoly[9][9] = {
    {},  // r = 0 unused
    {{-1, 2}, {1, 1}},
    {{1, 6}, {-1, 1}, {1, 1}},
    {{0, 1}, {1, 2}, {-3, 2}, {1, 1}},
    {{-1, 30}, {0, 1}, {1, 1}, {-2, 1}, {1, 1}},
    {{0, 1}, {-1, 6}, {0, 1}, {5, 3}, {-5, 2}, {1, 1}},
    {{1, 42}, {0, 1}, {-1, 2}, {0, 1}, {5, 2}, {-3, 1}, {1, 1}},
    {{0, 1}, {1, 6}, {0, 1}, {-7, 6}, {0, 1}, {7, 2}, {-7, 2}, {1, 1}},
    {{-1, 30}, {0, 1}, {2, 3}, {0, 1}, {-7, 3}, {0, 1}, {14, 3}, {-4, 1}, {1, 1}},
};

constexpr double kFactorial[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

// psi_r coefficient table rendered once: B_r coefficients / r!.
struct PsiTable {
  double coeff[9][9];
  PsiTable() {
    for (int r = 1; r <= 8; ++r) {
      for (int j = 0; j <= r; ++j) {
        coeff[r][j] = double(kBernoulliPoly[r][j].num) /
                      double(kBernoulliPoly[r][j].den) / kFactorial[r];
      }
    }
  }
};

const PsiTable& psi_table() {
  static const PsiTable table;
  return table;
}

// Depth-6 integration by parts of integral_T^inf psi_2/t^3:
//   -psi_3/T^3 - 3 psi_4/T^4 - 12 psi_5/T^5 - 60 psi_6/T^6
//   - 360 psi_7/T^7 - 2520 psi_8/T^8 + 20160 integral_T^inf psi_8/t^9.
// Dropped remainder: |psi_8| <= (1/30)/8!, so |rem| <= 2520*(1/30)/8! / T^8.
constexpr double kIbpRemainderCoef = 2520.0 * (1.0 / 30.0) / 40320.0;

double tail_ibp(double T) {
  static constexpr double c[6] = {1, 3, 12, 60, 360, 2520};
  double s = 0.0;
  double tp = T * T * T;
  for (int j = 0; j < 6; ++j) {
    s -= c[j] * psi_r(T, 3 + j) / tp;
    tp *= T;
  }
  return s;
}

// Exact integral of psi_2(t)/t^3 over [k+s0, k+s1] with 0 <= s0 <= s1 <= 1,
// from the antiderivative G(w) = log(w)/2 + (2k+1)/(2w) - (k^2+k+1/6)/(4w^2)
// of (s^2 - s + 1/6) / (2 w^3), w = k+s; written in difference form.
double period_piece(double k, double s0, double s1) {
  const double w0 = k + s0;
  const double w1 = k + s1;
  const double ds = s1 - s0;
  const double t_log = 0.5 * std::log1p(ds / w0);
  const double t_lin = -(2 * k + 1) * ds / (2 * w0 * w1);
  const double t_quad =
      (k * k + k + 1.0 / 6.0) * ds * (w0 + w1) / (4 * w0 * w0 * w1 * w1);
  return t_log + t_lin + t_quad;
}

}  // namespace

double psi_r(double u, int r) {
  if (r < 1 || r > 8) {
    throw std::invalid_argument("psi_r: order r must be in [1, 8]");
  }
  const double t = u - std::floor(u);
  const double* c = psi_table().coeff[r];
  double v = c[r];
  for (int j = r - 1; j >= 0; --j) v = v * t + c[j];
  return v;
}

double psi_r_fourier(double u, int r, std::int64_t V) {
  if (r < 1) throw std::invalid_argument("psi_r_fourier: r must be >= 1");
  if (V < 1) throw std::invalid_argument("psi_r_fourier: V must be >= 1");
  // -sum_n 2 cos(2 pi n u - pi r/2) / (2 pi n)^r with exact quarter phases
  static constexpr double ph_cos[4] = {1, 0, -1, 0};
  static constexpr double ph_sin[4] = {0, 1, 0, -1};
  const double cr = ph_cos[r % 4];
  const double sr = ph_sin[r % 4];
  const double frac = u - std::floor(u);
  KahanAccumulator<> acc;
  for (std::int64_t n = 1; n <= V; ++n) {
    const double theta = 2 * kPi * std::fmod(double(n) * frac, 1.0);
    double denom = 2 * kPi * double(n);
    double dp = denom;
    for (int j = 1; j < r; ++j) dp *= denom;
    acc.add(-2.0 * (cr * std::cos(theta) + sr * std::sin(theta)) / dp);
  }
  return acc.total();
}

TailIntegralResult psi2_tail_integral(double T, double tol) {
  if (!(T > 0.0)) throw std::invalid_argument("psi2_tail_integral: T must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("psi2_tail_integral: tol must be > 0");

  // Smallest start point where the dropped IBP remainder is within tol/2.
  const double t_min = std::pow(2.0 * kIbpRemainderCoef / tol, 1.0 / 8.0);

  double value;
  double bound;
  if (T >= t_min) {
    value = tail_ibp(T);
    bound = kIbpRemainderCoef / std::pow(T, 8);
  } else {
    // Head by exact per-period pieces up to an integer T0, IBP beyond.
    const double T0 = std::max(std::ceil(T), std::ceil(t_min));
    KahanAccumulator<> acc;
    double k = std::floor(T);
    double s = T - k;
    std::int64_t periods = 0;
    while (k < T0) {
      acc.add(period_piece(k, s, 1.0));
      k += 1.0;
      s = 0.0;
      ++periods;
    }
    acc.add(tail_ibp(T0));
    value = acc.total();
    bound = kIbpRemainderCoef / std::pow(T0, 8) +
            2.2e-16 * (1.0 + 0.01 * double(periods));
  }

  if (bound > tol) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "psi2_tail_integral: tolerance %.3e unattainable at T=%.6g "
                  "(best bound %.3e)",
                  tol, T, bound);
    throw tolerance_error(msg);
  }
  return TailIntegralResult{T, value, bound};
}

double cot_partial_fraction(int r, int m, std::int64_t V) {
  if (m < 2) throw std::invalid_argument("cot_partial_fraction: m must be >= 2");
  if (r < 1 || r >= m) {
    throw std::invalid_argument("cot_partial_fraction: r must satisfy 1 <= r <= m-1");
  }
  if (V < 1) throw std::invalid_argument("cot_partial_fraction: V must be >= 1");

  const double rr = double(r) * double(r);
  const double mm = double(m) * double(m);
  const std::int64_t v_eff = V < 256 ? 256 : V;

  KahanAccumulator<> acc;
  for (std::int64_t v = 1; v <= v_eff; ++v) {
    const double dv = double(v);
    acc.add(1.0 / (mm * dv * dv - rr));
  }

  // Euler-Maclaurin tail from N = v_eff + 1 for f(v) = 1/(m^2 v^2 - r^2):
  // integral + f/2 - f'/12 + f'''/720; the next term is O(1/(m^2 N^7)).
  const double N = double(v_eff + 1);
  const double g = mm * N * N - rr;
  const double integral =
      std::log((double(m) * N + r) / (double(m) * N - r)) / (2.0 * double(m) * r);
  const double f0 = 1.0 / g;
  const double f1 = -2.0 * mm * N / (g * g);
  const double f3 =
      24.0 * mm * mm * N / (g * g * g) - 48.0 * mm * mm * mm * N * N * N / (g * g * g * g);
  acc.add(integral + f0 / 2.0 - f1 / 12.0 + f3 / 720.0);

  return 1.0 / r - 2.0 * double(r) * acc.total();
}

double cot_closed(int r, int m) {
  if (m < 2) throw std::invalid_argument("cot_closed: m must be >= 2");
  if (r < 1 || r >= m) {
    throw std::invalid_argument("cot_closed: r must satisfy 1 <= r <= m-1");
  }
  if (2 * r == m) return 0.0;  // cot(pi/2)
  const double a = kPi * double(r) / double(m);
  return (kPi / double(m)) * (std::cos(a) / std::sin(a));
}

}  // namespace divsum
