#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srt {

// Largest relay count the closed-form path supports; the subset sums in the
// outage/intercept expressions enumerate 2^N - 1 decoding sets.
inline constexpr int kMaxRelays = 20;

enum class Scheme { kDirect, kSrs, kMrs, kAn };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

// Mean square channel gains E|h_xy|^2 per link. Vectors hold one entry per
// relay and must match SystemParams::n_relays.
struct LinkVariances {
  double sd = 1.0;  // transmitter -> destination
  double se = 1.0;  // transmitter -> eavesdropper
  double pd = 1.0;  // primary -> destination
  double pe = 1.0;  // primary -> eavesdropper
  std::vector<double> si;  // transmitter -> relay i
  std::vector<double> id;  // relay i -> destination
  std::vector<double> ie;  // relay i -> eavesdropper
  std::vector<double> pi;  // primary -> relay i

  // True when every relay -> destination gain has the same mean, which the
  // closed-form multi-relay outage expression requires.
  bool is_iid_relay_to_sd() const;

  // Broadcasts one scalar per link class across n relays.
  static LinkVariances homogeneous(int n, double sd, double se, double pd,
                                   double pe, double si, double id, double ie,
                                   double pi);
};

struct SystemParams {
  double p0 = 0.8;       // prior probability the licensed band is free
  double pd = 0.99;      // detection probability
  double pf = 0.01;      // false alarm probability
  double gamma_p = 10.0; // primary transmit SNR, linear
  double gamma_s = 10.0; // secondary transmit SNR, linear
  double rate = 1.0;     // target rate, bits/s/Hz
  int n_relays = 0;
  LinkVariances variances;
};

// Occupancy posterior given the band was sensed free.
struct SensingPosterior {
  double pi0 = 1.0;  // P(H0 | sensed free)
  double pi1 = 0.0;  // 1 - pi0
};

// Rate thresholds normalized by the secondary SNR.
struct Thresholds {
  double delta = 0.0;   // (2^R - 1) / gamma_s, one-slot schemes
  double lambda = 0.0;  // (2^{2R} - 1) / gamma_s, two-slot relaying
};

// Returns a message naming the first violated field, or nullopt when valid.
std::optional<std::string> check_params(const SystemParams& p);

// Throws std::invalid_argument with the check_params message.
void require_valid(const SystemParams& p);

SensingPosterior sensing_posterior(double p0, double pd, double pf);
inline SensingPosterior sensing_posterior(const SystemParams& p) {
  return sensing_posterior(p.p0, p.pd, p.pf);
}

Thresholds rate_thresholds(double rate, double gamma_s);
inline Thresholds rate_thresholds(const SystemParams& p) {
  return rate_thresholds(p.rate, p.gamma_s);
}

}  // namespace srt
