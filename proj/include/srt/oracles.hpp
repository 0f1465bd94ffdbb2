#pragma once

#include <span>

namespace srt {

// Quadrature oracles for the fading CDF building blocks. They evaluate the
// defining integrals directly, without the inclusion-exclusion or Erlang
// closed forms, so tests can check the analytic module against an
// independent route. Not used on any production path.
//
// Each throws std::runtime_error with the achieved error bound if the
// adaptive integrator fails to converge.

// Pr(max_i X_i < lam * gamma_p * Y + lam): expectation of the product CDF
// over Y ~ Exp(sigma_pd).
double oracle_max_exp_affine_cdf(std::span<const double> sigmas_id,
                                 double sigma_pd, double gamma_p, double lam);

// Pr(sum of k iid Exp(sigma_d) < lam * gamma_p * Y + lam): split integral
// against the Erlang density.
double oracle_sum_exp_affine_cdf(int k, double sigma_d, double sigma_pd,
                                 double gamma_p, double lam);

// Pr(relay `chosen` has the largest destination gain): integral of the
// competitors' product CDF against the chosen relay's density.
double oracle_selection_prob(std::span<const double> sigmas_id,
                             std::size_t chosen);

}  // namespace srt
