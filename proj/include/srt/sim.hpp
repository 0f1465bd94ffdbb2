#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "srt/model.hpp"
#include "srt/rng.hpp"

namespace srt {

// One draw of every fading coefficient plus the primary-occupancy indicator,
// already conditioned on the band having been sensed free.
struct ChannelRealization {
  std::complex<double> h_sd, h_se, h_pd, h_pe;
  std::vector<std::complex<double>> h_si, h_id, h_ie, h_pi;
  int alpha = 0;  // 1 when the band is actually occupied
};

// Relays that decoded the source message, as a bitmask over relay indices.
struct DecodingSet {
  std::uint32_t mask = 0;

  bool empty() const { return mask == 0; }
  bool contains(int i) const { return mask >> i & 1u; }
  int count() const;
};

struct SimResult {
  double op_hat = 0.0;
  double ip_hat = 0.0;
  double op_se = 0.0;  // binomial standard errors
  double ip_se = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SimOptions {
  int workers = 0;  // 0: one thread per hardware core
  // Draw (occupancy, sensing) pairs and discard sensed-busy trials instead of
  // sampling occupancy from the posterior directly. Statistically identical;
  // kept as a validation switch.
  bool rejection_sampling = false;
};

// Draws all channel gains and the occupancy indicator from the per-trial
// stream. Gains are drawn in a fixed order (sd, se, pd, pe, then per relay
// si, id, ie, pi), occupancy last.
ChannelRealization draw_realization(const SystemParams& p, TrialRng& rng,
                                    bool rejection_sampling = false);

// (destination, eavesdropper) capacities; direct transmission, full rate.
std::pair<double, double> cap_direct(const ChannelRealization& r,
                                     const SystemParams& p);

// Relays whose first-hop capacity at half rate exceeds the target rate.
DecodingSet decoding_set(const ChannelRealization& r, const SystemParams& p);

// Index of the decoding relay with the strongest relay->destination gain,
// ties to the lowest index. Selection sees only the destination gains, never
// the eavesdropper's.
int selected_relay(const ChannelRealization& r, DecodingSet dset);

// Half-rate capacities when the selected relay forwards. The set must be
// non-empty; an empty set means capacity 0 for both and is handled by the
// caller.
std::pair<double, double> srs_capacities(const ChannelRealization& r,
                                         DecodingSet dset,
                                         const SystemParams& p);

// Half-rate capacities when all decoding relays forward with matched-filter
// weights. Same empty-set contract as srs_capacities.
std::pair<double, double> mrs_capacities(const ChannelRealization& r,
                                         DecodingSet dset,
                                         const SystemParams& p);

// Unit-norm jamming direction, uniform on the sphere of the subspace where
// the relays' combined signal vanishes at the destination (v^T h_id = 0).
std::vector<std::complex<double>> an_null_direction(
    std::span<const std::complex<double>> h_id, TrialRng& rng);

// Artificial-noise baseline: the transmitter sends directly at half power
// while every relay radiates jamming (also at half power total) along
// an_null_direction. Needs at least two relays and consumes additional
// randomness for the jamming direction. Full-rate capacities.
std::pair<double, double> an_capacities(const ChannelRealization& r,
                                        const SystemParams& p, TrialRng& rng);

// Matched-filter combining weights w = conj(h_d) / |h_d|, unit norm.
std::vector<std::complex<double>> mrs_weights(
    std::span<const std::complex<double>> h_d);

// Destination SINR for an arbitrary weight vector; `interference` is the
// primary-interference power term (alpha * gamma_p * |h_pd|^2).
double mrs_dest_sinr(std::span<const std::complex<double>> w,
                     std::span<const std::complex<double>> h_d, double gamma_s,
                     double interference);

// Estimates OP and IP for one scheme as relative frequencies over `trials`
// independent realizations. Deterministic for fixed (scheme, params, trials,
// seed) regardless of worker count.
SimResult simulate(Scheme scheme, const SystemParams& p, std::uint64_t trials,
                   std::uint64_t seed, const SimOptions& opts = {});

}  // namespace srt
