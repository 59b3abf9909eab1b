#ifndef DIVSUM_KAHAN_HPP
#define DIVSUM_KAHAN_HPP

namespace divsum {

// Compensated accumulator (Kahan-Babuska / Neumaier variant).  Keeps long
// sums at ~1 ulp of relative error independent of the term count; the
// identity checks at x = 1e6 need about 1e-12 and plain summation drifts.
template <class T = double>
class KahanAccumulator {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (abs_(sum_) >= abs_(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  T total() const { return sum_ + comp_; }

 private:
  static T abs_(T x) { return x < T(0) ? -x : x; }

  T sum_{};
  T comp_{};
};

}  // namespace divsum

#endif
