#pragma once

#include <cmath>
#include <functional>

namespace srt {

// Neumaier variant of compensated summation. Keeps subset sums reproducible
// and accurate when terms alternate in sign.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Regularized lower incomplete gamma with integer shape k >= 1, i.e. the CDF
// of a sum of k unit-mean exponentials evaluated at x. Absolute error is well
// below 1e-12; relative accuracy is preserved in the deep lower tail, where
// the complementary form 1 - e^{-x} sum x^j/j! would cancel to noise.
double inc_gamma_lower_reg(double x, int k);

// ln(sum_{j=0}^{k-1} x^j / j!) evaluated in the log domain, usable for any
// x >= 0 without overflow. This is the weight sum of the Erlang survival
// function: Q(k, x) = e^{-x} * exp(log_sum_powers(x, k)).
double log_sum_powers(double x, int k);

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // sum of per-segment Kronrod error estimates
  bool converged = false;
  int segments = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) integration on [lo, hi]. Splits the segment
// with the largest error estimate until the tolerance is met or max_segments
// is reached. Deterministic for a given integrand and bounds.
QuadResult integrate_gk(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol = 1e-12,
                        double rel_tol = 1e-12, int max_segments = 4000);

}  // namespace srt
