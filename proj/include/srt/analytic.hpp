#pragma once

#include <optional>
#include <span>

#include "srt/model.hpp"

namespace srt {

// Values of an outage/intercept probability conditioned on the two occupancy
// branches (band actually free / actually busy), before mixing with the
// sensing posterior.
struct BranchPair {
  double h0 = 0.0;
  double h1 = 0.0;
};

struct AnalyticResult {
  double op = 1.0;
  std::optional<double> ip;  // absent for multi-relay combining
  BranchPair op_branches;
  std::optional<BranchPair> ip_branches;
};

// --- fading CDF building blocks -------------------------------------------
//
// All channels are Rayleigh, so squared gains are exponential with the given
// means. "affine" variants condition on primary interference: the threshold
// becomes lam * gamma_p * y + lam with y the primary link gain.

// Pr(max_i X_i < lam), X_i ~ Exp(sig_id[i]).
double max_exp_cdf(std::span<const double> sig_id, double lam);

// Pr(max_i X_i < lam * gamma_p * Y + lam), Y ~ Exp(sigma_pd). Evaluated by
// inclusion-exclusion over non-empty subsets in binary counter order; falls
// back to quad precision when the alternating sum cancels below 1e-8.
double max_exp_affine_cdf(std::span<const double> sig_id, double sigma_pd,
                          double gamma_p, double lam);

// Pr(selected relay's eavesdropper gain > lam), where the relay with the
// largest destination gain is selected from the set described by sig_id.
double selected_relay_exceed(std::span<const double> sig_id,
                             std::span<const double> sig_ie, double lam);

// Affine variant of the above under primary interference at the eavesdropper.
double selected_relay_exceed_affine(std::span<const double> sig_id,
                                    std::span<const double> sig_ie,
                                    double sigma_pe, double gamma_p,
                                    double lam);

// Pr(sum of k iid Exp(sigma_d) < lam): the Erlang CDF.
double erlang_cdf(double lam, double sigma_d, int k);

// Pr(sum of k iid Exp(sigma_d) < lam * gamma_p * Y + lam), Y ~ Exp(sigma_pd).
// Assembled in the log domain; the e^{1/(sigma_pd gamma_p)} factor of the
// direct form overflows long before the product leaves [0,1].
double erlang_affine_cdf(double lam, double sigma_d, double sigma_pd,
                         double gamma_p, int k);

// --- per-scheme closed forms -----------------------------------------------
//
// Branch pairs hold the probability conditioned on the band being actually
// free (h0) and actually busy (h1); the public scalar mixes them with the
// sensing posterior. All handle gamma_s == 0 as the limit OP = 1, IP = 0.

BranchPair op_direct_branches(const SystemParams& p);
BranchPair ip_direct_branches(const SystemParams& p);
BranchPair op_srs_branches(const SystemParams& p);
BranchPair ip_srs_branches(const SystemParams& p);
BranchPair op_mrs_branches(const SystemParams& p);

double op_direct(const SystemParams& p);
double ip_direct(const SystemParams& p);
double op_srs(const SystemParams& p);
double ip_srs(const SystemParams& p);

// Requires identical relay->destination variances; throws std::domain_error
// otherwise (the closed form does not exist for heterogeneous links; use the
// simulator instead).
double op_mrs(const SystemParams& p);

// Bundles the closed forms available for a scheme. The artificial-noise
// baseline has none and is rejected.
AnalyticResult analyze(Scheme scheme, const SystemParams& p);

}  // namespace srt
