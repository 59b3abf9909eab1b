#ifndef DIVSUM_QUADRATURE_HPP
#define DIVSUM_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <vector>

#include "divsum/errors.hpp"
#include "divsum/kahan.hpp"

namespace divsum {

struct QuadConfig {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  int max_depth = 50;   // <= 60
  int fourier_V = 1000; // truncation of the optional Fourier tail term
};

namespace quad_detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk15Result {
  double value;
  double error;
  double resabs;  // estimate of integral of |g|
};

template <class F>
Gk15Result gk15(F& g, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = g(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(fc) * kWgk[7];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = g(c - dx);
    fv2[j] = g(c + dx);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }
  resasc *= h;
  double err = std::fabs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return Gk15Result{resk * h, err, resabs * h};
}

}  // namespace quad_detail

// Adaptive bisection with the GK15 local rule and a global error budget:
// the worst segment is refined until the summed error estimates clear
// max(abs_tol, rel_tol * |result|).  Segments whose estimate is at rounding
// level are frozen; refinement past max_depth raises tolerance_error.
template <class F>
double quad_adaptive(F&& g, double lo, double hi, double abs_tol,
                     double rel_tol = 0.0, int max_depth = 50) {
  if (!(hi > lo)) return 0.0;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr std::size_t kMaxSegments = 1u << 20;

  struct Seg {
    double err, lo, hi, value, resabs;
    int depth;
    bool frozen;  // rounding-level estimate; splitting cannot improve it
  };
  auto make_seg = [&](double a, double b, int depth) {
    const auto r = quad_detail::gk15(g, a, b);
    return Seg{r.error, a, b, r.value, r.resabs, depth,
               r.error <= 100.0 * kEps * r.resabs};
  };
  auto worse = [](const Seg& a, const Seg& b) {
    const double ea = a.frozen ? -1.0 : a.err;
    const double eb = b.frozen ? -1.0 : b.err;
    if (ea != eb) return ea < eb;
    return a.lo > b.lo;  // deterministic tie-break
  };

  std::vector<Seg> heap{make_seg(lo, hi, 0)};
  double err_sum = heap[0].err;
  double val_sum = heap[0].value;
  for (;;) {
    const double budget =
        std::max(std::fabs(abs_tol), std::fabs(rel_tol) * std::fabs(val_sum));
    if (err_sum <= budget) break;
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Seg s = heap.back();
    const double mid = 0.5 * (s.lo + s.hi);
    if (s.frozen || s.depth >= max_depth || !(mid > s.lo && mid < s.hi) ||
        heap.size() >= kMaxSegments) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "quadrature tolerance not reached on [%.12g, %.12g] at depth %d "
                    "(err %.3e, budget %.3e)",
                    s.lo, s.hi, s.depth, s.err, budget);
      throw tolerance_error(msg);
    }
    heap.pop_back();
    err_sum -= s.err;
    val_sum -= s.value;
    for (const Seg& half : {make_seg(s.lo, mid, s.depth + 1),
                            make_seg(mid, s.hi, s.depth + 1)}) {
      err_sum += half.err;
      val_sum += half.value;
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end(), worse);
    }
  }
  // position-ordered compensated total for a deterministic result
  std::sort(heap.begin(), heap.end(),
            [](const Seg& a, const Seg& b) { return a.lo < b.lo; });
  KahanAccumulator<> acc;
  for (const Seg& s : heap) acc.add(s.value);
  return acc.total();
}

// Splits [lo, hi] at the given discontinuity/kink locations, then integrates
// each smooth piece adaptively with a length-proportional tolerance share.
template <class F>
double quad_with_breakpoints(F&& g, double lo, double hi,
                             std::span<const double> breakpoints,
                             const QuadConfig& cfg) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(lo);
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  const double total = hi - lo;
  KahanAccumulator<> acc;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (!(b > a)) continue;
    acc.add(quad_adaptive(g, a, b, cfg.abs_tol * (b - a) / total, cfg.rel_tol,
                          cfg.max_depth));
  }
  return acc.total();
}

}  // namespace divsum

#endif
