#ifndef DIVSUM_REAL128_HPP
#define DIVSUM_REAL128_HPP

// Extended-precision scalar support.  The tail-residual sweeps of the
// approximate functional equations sit far below double rounding noise
// for s >= 2 near x = 1e6 (the true residual scales like x^{-s} and
// x^{-s-1}), so those sweeps run in __float128 where available.

#include <cmath>

#if defined(__GNUC__) && !defined(__clang__) && defined(__SIZEOF_FLOAT128__)
#define DIVSUM_HAVE_FLOAT128 1
#include <quadmath.h>
#endif

namespace divsum {

// double overload set so scalar-templated kernels compile for either type
inline double rfloor(double x) { return std::floor(x); }
inline double rpow(double b, double e) { return std::pow(b, e); }
inline double rlog(double x) { return std::log(x); }
inline double rsqrt(double x) { return std::sqrt(x); }
inline double rabs(double x) { return std::fabs(x); }

#ifdef DIVSUM_HAVE_FLOAT128
using real128 = __float128;
inline real128 rfloor(real128 x) { return floorq(x); }
inline real128 rpow(real128 b, real128 e) { return powq(b, e); }
inline real128 rlog(real128 x) { return logq(x); }
inline real128 rsqrt(real128 x) { return sqrtq(x); }
inline real128 rabs(real128 x) { return fabsq(x); }
#else
using real128 = long double;
inline long double rfloor(long double x) { return std::floor(x); }
inline long double rpow(long double b, long double e) { return std::pow(b, e); }
inline long double rlog(long double x) { return std::log(x); }
inline long double rsqrt(long double x) { return std::sqrt(x); }
inline long double rabs(long double x) { return std::fabs(x); }
#endif

template <class T>
struct FloatTraits;

template <>
struct FloatTraits<double> {
  static double pi() { return 3.14159265358979323846; }
  static double euler_gamma() { return 0.5772156649015328606; }
  // target for auto-selected truncation in the zeta evaluator
  static double eps_target() { return 1e-15; }
};

#ifdef DIVSUM_HAVE_FLOAT128
template <>
struct FloatTraits<real128> {
  static real128 pi() {
    static const real128 p =
        strtoflt128("3.14159265358979323846264338327950288420", nullptr);
    return p;
  }
  static real128 euler_gamma() {
    static const real128 g =
        strtoflt128("0.57721566490153286060651209008240243104", nullptr);
    return g;
  }
  static double eps_target() { return 1e-31; }
};
#else
template <>
struct FloatTraits<real128> {
  static real128 pi() { return 3.141592653589793238462643383279502884L; }
  static real128 euler_gamma() { return 0.577215664901532860606512090082402431L; }
  static double eps_target() { return 1e-18; }
};
#endif

}  // namespace divsum

#endif
