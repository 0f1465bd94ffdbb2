#include "srt/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "srt/numerics.hpp"

namespace srt {

namespace {

double checked(const QuadResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream os;
    os << what << ": quadrature did not converge, achieved error bound "
       << r.abs_error << " over " << r.segments << " segments";
    throw std::runtime_error(os.str());
  }
  return r.value;
}

// Adaptive integration over [lo, hi] with geometric pre-splitting towards lo.
// The integrands below can have a boundary layer many orders of magnitude
// narrower than the domain (e.g. width sigma/(lam*gamma_p)); a single initial
// rule would step over it and report a deceptively small error estimate.
double integrate_layered(const std::function<double(double)>& f, double lo,
                         double hi, double abs_tol, const char* what) {
  constexpr int kLevels = 48;
  const double span = hi - lo;
  QuadResult total;
  total.converged = true;
  double prev = lo;
  for (int j = kLevels; j >= 0; --j) {
    const double next = j == 0 ? hi : lo + span * std::ldexp(1.0, -j);
    if (next <= prev) {
      continue;
    }
    const QuadResult r = integrate_gk(f, prev, next, abs_tol / kLevels);
    total.value += r.value;
    total.abs_error += r.abs_error;
    total.converged = total.converged && r.converged;
    total.segments += r.segments;
    prev = next;
  }
  return checked(total, what);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be > 0");
  }
}

}  // namespace

double oracle_max_exp_affine_cdf(std::span<const double> sigmas_id,
                                 double sigma_pd, double gamma_p, double lam) {
  if (sigmas_id.empty()) {
    throw std::invalid_argument("oracle_max_exp_affine_cdf: empty relay set");
  }
  require_positive(sigma_pd, "sigma_pd");
  if (lam == 0.0) {
    return 0.0;
  }
  const std::vector<double> sig(sigmas_id.begin(), sigmas_id.end());
  const auto integrand = [&](double y) {
    double prod = 1.0;
    for (const double s : sig) {
      prod *= -std::expm1(-(lam * gamma_p * y + lam) / s);
    }
    return std::exp(-y / sigma_pd) / sigma_pd * prod;
  };
  // Beyond 40 mean lengths the density tail contributes < 1e-14 of the total.
  const double hi = 40.0 * sigma_pd;
  return integrate_layered(integrand, 0.0, hi, 1e-12,
                           "oracle_max_exp_affine_cdf");
}

double oracle_sum_exp_affine_cdf(int k, double sigma_d, double sigma_pd,
                                 double gamma_p, double lam) {
  if (k < 1) {
    throw std::invalid_argument("oracle_sum_exp_affine_cdf: k must be >= 1");
  }
  require_positive(sigma_d, "sigma_d");
  require_positive(sigma_pd, "sigma_pd");
  if (lam == 0.0) {
    return 0.0;
  }
  const double log_norm = std::lgamma(k) + k * std::log(sigma_d);
  const auto erlang_pdf = [&](double x) {
    if (x <= 0.0) {
      return 0.0;
    }
    return std::exp((k - 1) * std::log(x) - x / sigma_d - log_norm);
  };
  const double below = integrate_layered(
      erlang_pdf, 0.0, lam, 1e-12, "oracle_sum_exp_affine_cdf (below)");
  if (gamma_p == 0.0) {
    return below;
  }
  // Above the threshold the primary gain must exceed x/(gamma_p lam) - 1/gamma_p.
  const auto tail = [&](double x) {
    const double y_min = x / (gamma_p * lam) - 1.0 / gamma_p;
    return erlang_pdf(x) * std::exp(-y_min / sigma_pd);
  };
  const double hi = std::max(lam, sigma_d * (50.0 + 10.0 * k));
  const double above =
      integrate_layered(tail, lam, hi, 1e-12, "oracle_sum_exp_affine_cdf (tail)");
  return below + above;
}

double oracle_selection_prob(std::span<const double> sigmas_id,
                             std::size_t chosen) {
  if (chosen >= sigmas_id.size()) {
    throw std::invalid_argument("oracle_selection_prob: index out of range");
  }
  const double own = sigmas_id[chosen];
  std::vector<double> rest;
  for (std::size_t j = 0; j < sigmas_id.size(); ++j) {
    if (j != chosen) {
      rest.push_back(sigmas_id[j]);
    }
  }
  if (rest.empty()) {
    return 1.0;
  }
  double max_sigma = own;
  for (const double s : rest) {
    max_sigma = std::max(max_sigma, s);
  }
  const auto integrand = [&](double y) {
    double prod = 1.0;
    for (const double s : rest) {
      prod *= -std::expm1(-y / s);
    }
    return std::exp(-y / own) / own * prod;
  };
  const double hi = 60.0 * max_sigma;
  return integrate_layered(integrand, 0.0, hi, 1e-12,
                           "oracle_selection_prob");
}

}  // namespace srt
