#include "divsum/zeta_afe.hpp"

#include <cmath>
#include <stdexcept>

#include "divsum/periodic.hpp"
#include "divsum/remainder.hpp"

namespace divsum {

namespace {

template <class T>
T main_term_t(T x) {
  const T g = FloatTraits<T>::euler_gamma();
  return x * rlog(x) + (T(2) * g - T(1)) * x + T(1) / T(4);
}

}  // namespace

double zeta_real(double s, int K, std::int64_t N) { return zeta_real_t<double>(s, K, N); }

double E1(double s, double x) {
  zeta_detail::check_s(s);
  if (!(x >= 0.0)) throw std::invalid_argument("E1: x must be >= 0");
  return zeta_real(s) - power_sum_t<double>(x, s);
}

double E1_asymptotic(double s, double x) {
  zeta_detail::check_s(s);
  if (!(x >= 1.0)) throw std::invalid_argument("E1_asymptotic: x must be >= 1");
  return std::pow(x, 1.0 - s) / (s - 1.0) + std::pow(x, -s) * psi(x);
}

double E2(double s, double x, const DivisorSieve& sieve) {
  zeta_detail::check_s(s);
  if (!(x >= 0.0)) throw std::invalid_argument("E2: x must be >= 0");
  const double z = zeta_real(s);
  return z * z - divisor_power_sum_t<double>(x, s, sieve);
}

double hyperbola_identity_rhs(double s, double x, const DivisorSieve& sieve) {
  zeta_detail::check_s(s);
  if (!(x >= 0.0)) throw std::invalid_argument("hyperbola_identity_rhs: x must be >= 0");
  if (std::floor(x) > double(sieve.limit())) {
    throw std::out_of_range("hyperbola_identity_rhs: x exceeds sieve limit");
  }
  const double z = zeta_real(s);
  const double sx = std::sqrt(x);
  const std::uint64_t M = isqrt_floor(x);
  KahanAccumulator<> acc;
  for (std::uint64_t n = 1; n <= M; ++n) {
    const double e1 = z - power_sum_t<double>(x / double(n), s);
    acc.add(std::pow(double(n), -s) * e1);
  }
  const double e1s = z - power_sum_t<double>(sx, s);
  return 2.0 * acc.total() + e1s * e1s;
}

double theorem3_rhs(double s, double x, const DivisorSieve& sieve) {
  zeta_detail::check_s(s);
  if (!(x >= 1.0)) throw std::invalid_argument("theorem3_rhs: x must be >= 1");
  const double sx = std::sqrt(x);
  const double z = zeta_real(s);
  const double e1s = z - power_sum_t<double>(sx, s);
  return 2.0 * std::pow(x, 1.0 - s) / (s - 1.0) * harmonic_sum(sx) -
         std::pow(x, -s) * delta_direct(x, sieve) + e1s * e1s;
}

AfeRecord afe_record(double s, double x, const DivisorSieve& sieve) {
  AfeRecord rec;
  rec.s = s;
  rec.x = x;
  rec.E1 = E1(s, x);
  rec.E2 = E2(s, x, sieve);
  rec.hyperbola_residual = rec.E2 - hyperbola_identity_rhs(s, x, sieve);
  rec.theorem3_residual = rec.E2 - theorem3_rhs(s, x, sieve);
  rec.scaled_residual = rec.theorem3_residual * std::pow(x, s) / s;
  return rec;
}

std::vector<AfeScalingPoint> afe_scaling_sweep(double s,
                                               std::span<const double> xs,
                                               const DivisorSieve& sieve) {
  zeta_detail::check_s(s);
  using R = real128;
  std::vector<AfeScalingPoint> out;
  out.reserve(xs.size());
  if (xs.empty()) return out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw std::invalid_argument("afe_scaling_sweep: x grid must be ascending");
    }
  }
  if (std::floor(xs.back()) > double(sieve.limit())) {
    throw std::out_of_range("afe_scaling_sweep: grid exceeds sieve limit");
  }

  const R s_r = R(s);
  const R one = R(1);
  const R z = zeta_real_t<R>(s, 8);
  KahanAccumulator<R> pow_sum;      // sum n^-s
  KahanAccumulator<R> dpow_sum;     // sum d(n) n^-s
  std::int64_t n_done = 0;

  for (double x : xs) {
    const auto fx = static_cast<std::int64_t>(std::floor(x));
    for (std::int64_t n = n_done + 1; n <= fx; ++n) {
      const R t = rpow(R(double(n)), -s_r);
      pow_sum.add(t);
      dpow_sum.add(R(double(sieve.count(std::uint64_t(n)))) * t);
    }
    n_done = fx;

    const R x_r = R(x);
    const double sx = std::sqrt(x);
    const R e1 = z - pow_sum.total();
    const R e2 = z * z - dpow_sum.total();
    const R e1s = z - power_sum_t<R>(sx, s);
    const R harm = harmonic_sum_t<R>(sx);
    const R delta = R(double(sieve.summatory(std::uint64_t(fx)))) - main_term_t<R>(x_r);
    const R rhs3 = R(2) * rpow(x_r, one - s_r) / (s_r - one) * harm -
                   rpow(x_r, -s_r) * delta + e1s * e1s;
    const R r3 = e2 - rhs3;
    const R r1 = e1 - rpow(x_r, one - s_r) / (s_r - one) - rpow(x_r, -s_r) * psi_t(x_r);

    AfeScalingPoint p;
    p.x = x;
    p.theorem3_residual = double(r3);
    p.e1_residual = double(r1);
    p.scaled_theorem3 = double(rabs(r3) * rpow(x_r, s_r) / s_r);
    p.scaled_e1 = double(rabs(r1) * rpow(x_r, s_r + one) / s_r);
    out.push_back(p);
  }
  return out;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("loglog_slope: need two same-length samples");
  }
  const auto n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log10(xs[i]);
    const double ly = std::log10(std::max(std::fabs(ys[i]), 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace divsum
