#include "srt/analytic.hpp"

#include <quadmath.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "srt/numerics.hpp"
#include "srt/subsets.hpp"

namespace srt {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Pr(X > lam * gamma_p * Y + lam) for X ~ Exp(sigma_x), Y ~ Exp(sigma_p).
double exceed_affine(double sigma_x, double sigma_p, double gamma_p,
                     double lam) {
  return sigma_x / (sigma_p * gamma_p * lam + sigma_x) *
         std::exp(-lam / sigma_x);
}

// 1 - exceed_affine without cancellation: the complement is assembled from
// two positive parts so the deep tail (lam -> 0) keeps relative accuracy.
double below_affine(double sigma_x, double sigma_p, double gamma_p,
                    double lam) {
  const double a = sigma_p * gamma_p * lam;
  return -std::expm1(-lam / sigma_x) +
         std::exp(-lam / sigma_x) * a / (a + sigma_x);
}

void require_subset_size(std::size_t k) {
  if (k < 1 || k > static_cast<std::size_t>(kMaxSubsetGround)) {
    throw std::invalid_argument("relay subset size must be in [1, 20]");
  }
}

}  // namespace

double max_exp_cdf(std::span<const double> sig_id, double lam) {
  require_subset_size(sig_id.size());
  double p = 1.0;
  for (const double s : sig_id) {
    p *= -std::expm1(-lam / s);
  }
  return p;
}

double max_exp_affine_cdf(std::span<const double> sig_id, double sigma_pd,
                          double gamma_p, double lam) {
  require_subset_size(sig_id.size());
  if (lam == 0.0) {
    return 0.0;
  }
  if (gamma_p == 0.0) {
    return max_exp_cdf(sig_id, lam);
  }
  const std::size_t k = sig_id.size();
  const std::uint32_t full = (1u << k) - 1u;
  NeumaierSum acc;
  acc.add(1.0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    double sum_b = 0.0;  // lam / sigma_id over the subset
    double sum_a = 0.0;  // lam * gamma_p * sigma_pd / sigma_id over the subset
    for (std::size_t j = 0; j < k; ++j) {
      if (m >> j & 1u) {
        sum_b += lam / sig_id[j];
        sum_a += lam * gamma_p * sigma_pd / sig_id[j];
      }
    }
    const double term = std::exp(-sum_b) / (1.0 + sum_a);
    acc.add(std::popcount(m) % 2 == 1 ? -term : term);
  }
  const double v = acc.value();
  if (v >= 1e-8) {
    return std::min(v, 1.0);
  }
  // The alternating sum has cancelled almost completely; the O(1) terms leave
  // ~1e-16 of absolute noise, which would swamp the true tail value. Redo the
  // same sum in quad precision.
  __float128 q = 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    __float128 sum_b = 0;
    __float128 sum_a = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (m >> j & 1u) {
        sum_b += static_cast<__float128>(lam) / sig_id[j];
        sum_a += static_cast<__float128>(lam) * gamma_p * sigma_pd / sig_id[j];
      }
    }
    const __float128 term = expq(-sum_b) / (1 + sum_a);
    q += std::popcount(m) % 2 == 1 ? -term : term;
  }
  return clamp01(static_cast<double>(q));
}

namespace {

// Pr(relay `chosen` has the largest destination gain within the set): one
// inclusion-exclusion sum over non-empty subsets of the competitors.
double selection_probability(std::span<const double> sig_id,
                             std::size_t chosen) {
  const std::size_t k = sig_id.size();
  std::vector<double> rest;
  rest.reserve(k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (j != chosen) {
      rest.push_back(sig_id[j]);
    }
  }
  NeumaierSum acc;
  acc.add(1.0);
  const std::uint32_t full = rest.empty() ? 0u : (1u << rest.size()) - 1u;
  for (std::uint32_t m = 1; m <= full && !rest.empty(); ++m) {
    double ratio = 0.0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (m >> j & 1u) {
        ratio += sig_id[chosen] / rest[j];
      }
    }
    const double term = 1.0 / (1.0 + ratio);
    acc.add(std::popcount(m) % 2 == 1 ? -term : term);
  }
  return clamp01(acc.value());
}

}  // namespace

double selected_relay_exceed(std::span<const double> sig_id,
                             std::span<const double> sig_ie, double lam) {
  require_subset_size(sig_id.size());
  if (sig_id.size() != sig_ie.size()) {
    throw std::invalid_argument("selected_relay_exceed: size mismatch");
  }
  NeumaierSum total;
  for (std::size_t i = 0; i < sig_id.size(); ++i) {
    total.add(std::exp(-lam / sig_ie[i]) * selection_probability(sig_id, i));
  }
  return clamp01(total.value());
}

double selected_relay_exceed_affine(std::span<const double> sig_id,
                                    std::span<const double> sig_ie,
                                    double sigma_pe, double gamma_p,
                                    double lam) {
  require_subset_size(sig_id.size());
  if (sig_id.size() != sig_ie.size()) {
    throw std::invalid_argument("selected_relay_exceed_affine: size mismatch");
  }
  NeumaierSum total;
  for (std::size_t i = 0; i < sig_id.size(); ++i) {
    total.add(exceed_affine(sig_ie[i], sigma_pe, gamma_p, lam) *
              selection_probability(sig_id, i));
  }
  return clamp01(total.value());
}

double erlang_cdf(double lam, double sigma_d, int k) {
  return inc_gamma_lower_reg(lam / sigma_d, k);
}

double erlang_affine_cdf(double lam, double sigma_d, double sigma_pd,
                         double gamma_p, int k) {
  if (lam == 0.0) {
    return 0.0;
  }
  if (gamma_p == 0.0) {
    return erlang_cdf(lam, sigma_d, k);
  }
  if (k == 1) {
    // A one-relay sum is the one-relay max; route through the same code so
    // the two schemes agree bit for bit in the degenerate case.
    const double single[1] = {sigma_d};
    return max_exp_affine_cdf(single, sigma_pd, gamma_p, lam);
  }
  const double x2 = lam / sigma_d + 1.0 / (sigma_pd * gamma_p);
  const double c = sigma_d / (sigma_pd * gamma_p * lam);
  if (!std::isfinite(x2) || !std::isfinite(c)) {
    // 1/(sigma_pd * gamma_p) overflowed: the interference term is already
    // far below the zero-interference limit.
    return erlang_cdf(lam, sigma_d, k);
  }
  const double log_tail =
      -lam / sigma_d + log_sum_powers(x2, k) - k * std::log1p(c);
  return clamp01(erlang_cdf(lam, sigma_d, k) + std::exp(log_tail));
}

namespace {

// Per-relay first-hop probabilities for a given Lambda, split by occupancy.
struct DecodeProbs {
  std::vector<double> below0;   // Pr(gain < Lambda), band free
  std::vector<double> exceed0;  // Pr(gain > Lambda), band free
  std::vector<double> below1;   // affine variants, band busy
  std::vector<double> exceed1;
};

DecodeProbs first_hop_probs(const SystemParams& p, double lam) {
  const std::size_t n = static_cast<std::size_t>(p.n_relays);
  DecodeProbs d;
  d.below0.resize(n);
  d.exceed0.resize(n);
  d.below1.resize(n);
  d.exceed1.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = p.variances.si[i];
    d.below0[i] = -std::expm1(-lam / s);
    d.exceed0[i] = std::exp(-lam / s);
    d.exceed1[i] = exceed_affine(s, p.variances.pi[i], p.gamma_p, lam);
    d.below1[i] = below_affine(s, p.variances.pi[i], p.gamma_p, lam);
  }
  return d;
}

// Pr(D = subset described by mask) in the two occupancy branches.
struct SubsetWeight {
  double w0 = 1.0;
  double w1 = 1.0;
};

SubsetWeight decoding_set_weight(const DecodeProbs& d, std::uint32_t mask) {
  SubsetWeight w;
  for (std::size_t j = 0; j < d.below0.size(); ++j) {
    if (mask >> j & 1u) {
      w.w0 *= d.exceed0[j];
      w.w1 *= d.exceed1[j];
    } else {
      w.w0 *= d.below0[j];
      w.w1 *= d.below1[j];
    }
  }
  return w;
}

void require_relays(const SystemParams& p) {
  if (p.n_relays < 1) {
    throw std::invalid_argument("relay schemes need n_relays >= 1");
  }
}

constexpr BranchPair kOutageLimit{1.0, 1.0};    // gamma_s == 0
constexpr BranchPair kInterceptLimit{0.0, 0.0};

double mix(const BranchPair& b, const SensingPosterior& post) {
  return clamp01(post.pi0 * b.h0 + post.pi1 * b.h1);
}

}  // namespace

BranchPair op_direct_branches(const SystemParams& p) {
  require_valid(p);
  if (p.gamma_s == 0.0) {
    return kOutageLimit;
  }
  const double delta = rate_thresholds(p).delta;
  return {-std::expm1(-delta / p.variances.sd),
          below_affine(p.variances.sd, p.variances.pd, p.gamma_p, delta)};
}

BranchPair ip_direct_branches(const SystemParams& p) {
  require_valid(p);
  if (p.gamma_s == 0.0) {
    return kInterceptLimit;
  }
  const double delta = rate_thresholds(p).delta;
  return {std::exp(-delta / p.variances.se),
          exceed_affine(p.variances.se, p.variances.pe, p.gamma_p, delta)};
}

BranchPair op_srs_branches(const SystemParams& p) {
  require_valid(p);
  require_relays(p);
  if (p.gamma_s == 0.0) {
    return kOutageLimit;
  }
  const double lam = rate_thresholds(p).lambda;
  const DecodeProbs d = first_hop_probs(p, lam);
  const std::uint32_t full = (1u << p.n_relays) - 1u;

  NeumaierSum b0;
  NeumaierSum b1;
  {  // empty decoding set: outage with certainty
    SubsetWeight w = decoding_set_weight(d, 0);
    b0.add(w.w0);
    b1.add(w.w1);
  }
  std::vector<double> sub_id;
  sub_id.reserve(static_cast<std::size_t>(p.n_relays));
  for (std::uint32_t m = 1; m <= full; ++m) {
    sub_id.clear();
    for (int j = 0; j < p.n_relays; ++j) {
      if (m >> j & 1u) {
        sub_id.push_back(p.variances.id[static_cast<std::size_t>(j)]);
      }
    }
    const SubsetWeight w = decoding_set_weight(d, m);
    b0.add(w.w0 * max_exp_cdf(sub_id, lam));
    b1.add(w.w1 *
           max_exp_affine_cdf(sub_id, p.variances.pd, p.gamma_p, lam));
  }
  return {clamp01(b0.value()), clamp01(b1.value())};
}

BranchPair ip_srs_branches(const SystemParams& p) {
  require_valid(p);
  require_relays(p);
  if (p.gamma_s == 0.0) {
    return kInterceptLimit;
  }
  const double lam = rate_thresholds(p).lambda;
  const DecodeProbs d = first_hop_probs(p, lam);
  const std::uint32_t full = (1u << p.n_relays) - 1u;

  NeumaierSum b0;
  NeumaierSum b1;
  std::vector<double> sub_id;
  std::vector<double> sub_ie;
  for (std::uint32_t m = 1; m <= full; ++m) {
    sub_id.clear();
    sub_ie.clear();
    for (int j = 0; j < p.n_relays; ++j) {
      if (m >> j & 1u) {
        sub_id.push_back(p.variances.id[static_cast<std::size_t>(j)]);
        sub_ie.push_back(p.variances.ie[static_cast<std::size_t>(j)]);
      }
    }
    const SubsetWeight w = decoding_set_weight(d, m);
    b0.add(w.w0 * selected_relay_exceed(sub_id, sub_ie, lam));
    b1.add(w.w1 * selected_relay_exceed_affine(sub_id, sub_ie, p.variances.pe,
                                               p.gamma_p, lam));
  }
  return {clamp01(b0.value()), clamp01(b1.value())};
}

BranchPair op_mrs_branches(const SystemParams& p) {
  require_valid(p);
  require_relays(p);
  if (!p.variances.is_iid_relay_to_sd()) {
    throw std::domain_error(
        "op_mrs: the closed form requires identical relay-to-destination "
        "variances; use the simulator for heterogeneous links");
  }
  if (p.gamma_s == 0.0) {
    return kOutageLimit;
  }
  const double lam = rate_thresholds(p).lambda;
  const double sigma_d = p.variances.id.front();
  const DecodeProbs d = first_hop_probs(p, lam);
  const std::uint32_t full = (1u << p.n_relays) - 1u;

  NeumaierSum b0;
  NeumaierSum b1;
  {
    SubsetWeight w = decoding_set_weight(d, 0);
    b0.add(w.w0);
    b1.add(w.w1);
  }
  for (std::uint32_t m = 1; m <= full; ++m) {
    const int k = std::popcount(m);
    const SubsetWeight w = decoding_set_weight(d, m);
    b0.add(w.w0 * erlang_cdf(lam, sigma_d, k));
    b1.add(w.w1 *
           erlang_affine_cdf(lam, sigma_d, p.variances.pd, p.gamma_p, k));
  }
  return {clamp01(b0.value()), clamp01(b1.value())};
}

double op_direct(const SystemParams& p) {
  return mix(op_direct_branches(p), sensing_posterior(p));
}

double ip_direct(const SystemParams& p) {
  return mix(ip_direct_branches(p), sensing_posterior(p));
}

double op_srs(const SystemParams& p) {
  return mix(op_srs_branches(p), sensing_posterior(p));
}

double ip_srs(const SystemParams& p) {
  return mix(ip_srs_branches(p), sensing_posterior(p));
}

double op_mrs(const SystemParams& p) {
  return mix(op_mrs_branches(p), sensing_posterior(p));
}

AnalyticResult analyze(Scheme scheme, const SystemParams& p) {
  const SensingPosterior post = sensing_posterior(p);
  AnalyticResult r;
  switch (scheme) {
    case Scheme::kDirect:
      r.op_branches = op_direct_branches(p);
      r.ip_branches = ip_direct_branches(p);
      break;
    case Scheme::kSrs:
      r.op_branches = op_srs_branches(p);
      r.ip_branches = ip_srs_branches(p);
      break;
    case Scheme::kMrs:
      r.op_branches = op_mrs_branches(p);
      break;
    case Scheme::kAn:
      throw std::invalid_argument(
          "analyze: the artificial-noise baseline has no closed form");
  }
  r.op = mix(r.op_branches, post);
  if (r.ip_branches) {
    r.ip = mix(*r.ip_branches, post);
  }
  return r;
}

}  // namespace srt
