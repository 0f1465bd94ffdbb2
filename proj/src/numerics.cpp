#include "srt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace srt {

namespace {

void require_gamma_domain(double x, int k) {
  if (!(x >= 0.0)) {
    throw std::domain_error("inc_gamma_lower_reg: x must be >= 0");
  }
  if (k < 1) {
    throw std::domain_error("inc_gamma_lower_reg: k must be >= 1");
  }
}

}  // namespace

double inc_gamma_lower_reg(double x, int k) {
  require_gamma_domain(x, k);
  if (x == 0.0) {
    return 0.0;
  }
  if (k == 1) {
    return -std::expm1(-x);
  }
  if (x < k + 1.0) {
    // Ascending series P = x^k e^{-x}/k! * sum_j x^j / ((k+1)...(k+j)).
    // All terms positive, so the lower tail keeps full relative accuracy.
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < 10000; ++j) {
      term *= x / (k + j);
      sum += term;
      if (term < sum * 1e-17) {
        break;
      }
    }
    const double front = std::exp(k * std::log(x) - x - std::lgamma(k + 1.0));
    return std::min(1.0, front * sum);
  }
  if (x <= 500.0) {
    // Complementary form; Q(k,x) is bounded away from 1 here.
    NeumaierSum s;
    double term = 1.0;
    s.add(term);
    for (int j = 1; j < k; ++j) {
      term *= x / j;
      s.add(term);
    }
    return 1.0 - std::exp(-x) * s.value();
  }
  // e^{-x} underflows or the power sum overflows; work in the log domain.
  return -std::expm1(-x + log_sum_powers(x, k));
}

double log_sum_powers(double x, int k) {
  require_gamma_domain(x, k);
  if (x == 0.0 || k == 1) {
    return 0.0;
  }
  const double lx = std::log(x);
  double m = 0.0;  // j = 0 term is 1 -> log 0 term = 0
  std::vector<double> lt(static_cast<std::size_t>(k));
  lt[0] = 0.0;
  for (int j = 1; j < k; ++j) {
    lt[static_cast<std::size_t>(j)] = j * lx - std::lgamma(j + 1.0);
    m = std::max(m, lt[static_cast<std::size_t>(j)]);
  }
  double s = 0.0;
  for (int j = 0; j < k; ++j) {
    s += std::exp(lt[static_cast<std::size_t>(j)] - m);
  }
  return m + std::log(s);
}

namespace {

// 15-point Kronrod abscissae (positive half) with the embedded 7-point Gauss
// rule at the odd indices. Standard QUADPACK dqk15 values.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Segment {
  double lo, hi, value, error;
};

Segment eval_segment(const std::function<double(double)>& f, double lo,
                     double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fsum = f(c - dx) + f(c + dx);
    kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) {
      gauss += kWg[i / 2] * fsum;
    }
  }
  kronrod *= h;
  gauss *= h;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, double rel_tol,
                        int max_segments) {
  std::vector<Segment> segs;
  segs.push_back(eval_segment(f, lo, hi));
  while (static_cast<int>(segs.size()) < max_segments) {
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      err += segs[i].error;
      if (segs[i].error > segs[worst].error) {
        worst = i;
      }
    }
    if (err <= std::max(abs_tol, rel_tol * std::abs(total))) {
      return {total, err, true, static_cast<int>(segs.size())};
    }
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.lo + s.hi);
    segs[worst] = eval_segment(f, s.lo, mid);
    segs.push_back(eval_segment(f, mid, s.hi));
  }
  double total = 0.0;
  double err = 0.0;
  for (const auto& s : segs) {
    total += s.value;
    err += s.error;
  }
  const bool ok = err <= std::max(abs_tol, rel_tol * std::abs(total));
  return {total, err, ok, static_cast<int>(segs.size())};
}

}  // namespace srt
