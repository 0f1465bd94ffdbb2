#include "srt/sim.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace srt {

int DecodingSet::count() const { return std::popcount(mask); }

namespace {

double sq(const std::complex<double>& h) { return std::norm(h); }

double log2p1(double x) { return std::log2(1.0 + x); }

void draw_gain_vector(std::vector<std::complex<double>>& out,
                      const std::vector<double>& variances, TrialRng& rng) {
  out.resize(variances.size());
  for (std::size_t i = 0; i < variances.size(); ++i) {
    out[i] = rng.next_cgauss(variances[i]);
  }
}

int draw_alpha(const SystemParams& p, TrialRng& rng, bool rejection) {
  if (!rejection) {
    return rng.next_bernoulli(sensing_posterior(p).pi1) ? 1 : 0;
  }
  // Replay the sensing experiment until the band is sensed free.
  for (;;) {
    const bool occupied = rng.next_bernoulli(1.0 - p.p0);
    const bool sensed_busy = rng.next_bernoulli(occupied ? p.pd : p.pf);
    if (!sensed_busy) {
      return occupied ? 1 : 0;
    }
  }
}

}  // namespace

ChannelRealization draw_realization(const SystemParams& p, TrialRng& rng,
                                    bool rejection_sampling) {
  ChannelRealization r;
  r.h_sd = rng.next_cgauss(p.variances.sd);
  r.h_se = rng.next_cgauss(p.variances.se);
  r.h_pd = rng.next_cgauss(p.variances.pd);
  r.h_pe = rng.next_cgauss(p.variances.pe);
  draw_gain_vector(r.h_si, p.variances.si, rng);
  draw_gain_vector(r.h_id, p.variances.id, rng);
  draw_gain_vector(r.h_ie, p.variances.ie, rng);
  draw_gain_vector(r.h_pi, p.variances.pi, rng);
  r.alpha = draw_alpha(p, rng, rejection_sampling);
  return r;
}

std::pair<double, double> cap_direct(const ChannelRealization& r,
                                     const SystemParams& p) {
  const double c_sd =
      log2p1(sq(r.h_sd) * p.gamma_s / (r.alpha * sq(r.h_pd) * p.gamma_p + 1.0));
  const double c_se =
      log2p1(sq(r.h_se) * p.gamma_s / (r.alpha * sq(r.h_pe) * p.gamma_p + 1.0));
  return {c_sd, c_se};
}

DecodingSet decoding_set(const ChannelRealization& r, const SystemParams& p) {
  // C_si > R at half rate is equivalent to the first-hop SINR exceeding
  // 2^{2R} - 1; ties sit on a measure-zero boundary and are excluded.
  const double threshold = std::exp2(2.0 * p.rate) - 1.0;
  DecodingSet d;
  for (int i = 0; i < p.n_relays; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double sinr = sq(r.h_si[idx]) * p.gamma_s /
                        (r.alpha * sq(r.h_pi[idx]) * p.gamma_p + 1.0);
    if (sinr > threshold) {
      d.mask |= 1u << i;
    }
  }
  return d;
}

int selected_relay(const ChannelRealization& r, DecodingSet dset) {
  if (dset.empty()) {
    throw std::logic_error("selected_relay: empty decoding set");
  }
  int best = -1;
  double best_gain = -1.0;
  for (std::size_t i = 0; i < r.h_id.size(); ++i) {
    if (!dset.contains(static_cast<int>(i))) {
      continue;
    }
    const double g = sq(r.h_id[i]);
    if (g > best_gain) {
      best_gain = g;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::pair<double, double> srs_capacities(const ChannelRealization& r,
                                         DecodingSet dset,
                                         const SystemParams& p) {
  const int best = selected_relay(r, dset);
  const double best_gain = sq(r.h_id[static_cast<std::size_t>(best)]);
  const double c_bd = 0.5 * log2p1(p.gamma_s * best_gain /
                                   (r.alpha * sq(r.h_pd) * p.gamma_p + 1.0));
  const double c_be =
      0.5 * log2p1(p.gamma_s * sq(r.h_ie[static_cast<std::size_t>(best)]) /
                   (r.alpha * sq(r.h_pe) * p.gamma_p + 1.0));
  return {c_bd, c_be};
}

std::pair<double, double> mrs_capacities(const ChannelRealization& r,
                                         DecodingSet dset,
                                         const SystemParams& p) {
  if (dset.empty()) {
    throw std::logic_error("mrs_capacities: empty decoding set");
  }
  if (dset.count() == 1) {
    // One combining relay is one selected relay; share the code path so the
    // degenerate case agrees bit for bit.
    return srs_capacities(r, dset, p);
  }
  double sum_d = 0.0;
  std::complex<double> dot{0.0, 0.0};  // h_d^H h_e over the decoding set
  for (int i = 0; i < p.n_relays; ++i) {
    if (!dset.contains(i)) {
      continue;
    }
    const auto idx = static_cast<std::size_t>(i);
    sum_d += sq(r.h_id[idx]);
    dot += std::conj(r.h_id[idx]) * r.h_ie[idx];
  }
  const double eav_gain = sum_d > 0.0 ? std::norm(dot) / sum_d : 0.0;
  const double c_d = 0.5 * log2p1(p.gamma_s * sum_d /
                                  (r.alpha * p.gamma_p * sq(r.h_pd) + 1.0));
  const double c_e = 0.5 * log2p1(p.gamma_s * eav_gain /
                                  (r.alpha * p.gamma_p * sq(r.h_pe) + 1.0));
  return {c_d, c_e};
}

std::vector<std::complex<double>> an_null_direction(
    std::span<const std::complex<double>> h_id, TrialRng& rng) {
  const std::size_t n = h_id.size();
  if (n < 2) {
    throw std::invalid_argument(
        "an_null_direction: a one-dimensional channel has no null space");
  }
  // Project a complex Gaussian vector onto the orthogonal complement of
  // conj(h_id) and normalize; redraw in the measure-zero degenerate case.
  std::vector<std::complex<double>> v(n);
  double norm2 = 0.0;
  do {
    std::vector<std::complex<double>> g(n);
    std::complex<double> dot{0.0, 0.0};
    double c_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = rng.next_cgauss(1.0);
      dot += h_id[i] * g[i];  // <conj(h_id), g>
      c_norm2 += sq(h_id[i]);
    }
    const std::complex<double> scale =
        c_norm2 > 0.0 ? dot / c_norm2 : std::complex<double>{0.0, 0.0};
    norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = g[i] - std::conj(h_id[i]) * scale;
      norm2 += sq(v[i]);
    }
  } while (norm2 == 0.0);
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (auto& x : v) {
    x *= inv_norm;
  }
  return v;
}

std::pair<double, double> an_capacities(const ChannelRealization& r,
                                        const SystemParams& p, TrialRng& rng) {
  if (p.n_relays < 2) {
    throw std::invalid_argument(
        "an_capacities: jamming in the null space of the relay->destination "
        "channel needs at least 2 relays");
  }
  const auto n = static_cast<std::size_t>(p.n_relays);
  const std::vector<std::complex<double>> v = an_null_direction(r.h_id, rng);
  std::complex<double> leak{0.0, 0.0};  // v^T h_ie
  for (std::size_t i = 0; i < n; ++i) {
    leak += v[i] * r.h_ie[i];
  }
  const double half = 0.5 * p.gamma_s;
  const double c_d =
      log2p1(half * sq(r.h_sd) / (r.alpha * p.gamma_p * sq(r.h_pd) + 1.0));
  const double c_e = log2p1(half * sq(r.h_se) /
                            (half * std::norm(leak) +
                             r.alpha * p.gamma_p * sq(r.h_pe) + 1.0));
  return {c_d, c_e};
}

std::vector<std::complex<double>> mrs_weights(
    std::span<const std::complex<double>> h_d) {
  double norm2 = 0.0;
  for (const auto& h : h_d) {
    norm2 += std::norm(h);
  }
  const double inv_norm = 1.0 / std::sqrt(norm2);
  std::vector<std::complex<double>> w(h_d.size());
  for (std::size_t i = 0; i < h_d.size(); ++i) {
    w[i] = std::conj(h_d[i]) * inv_norm;
  }
  return w;
}

double mrs_dest_sinr(std::span<const std::complex<double>> w,
                     std::span<const std::complex<double>> h_d, double gamma_s,
                     double interference) {
  std::complex<double> dot{0.0, 0.0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    dot += w[i] * h_d[i];
  }
  return gamma_s * std::norm(dot) / (interference + 1.0);
}

namespace {

struct EventCounts {
  std::uint64_t outages = 0;
  std::uint64_t intercepts = 0;
};

EventCounts run_chunk(Scheme scheme, const SystemParams& p,
                      std::uint64_t begin, std::uint64_t end,
                      std::uint64_t seed, bool rejection) {
  EventCounts counts;
  for (std::uint64_t t = begin; t < end; ++t) {
    TrialRng rng(seed, t);
    const ChannelRealization real = draw_realization(p, rng, rejection);
    double c_dest = 0.0;
    double c_eav = 0.0;
    switch (scheme) {
      case Scheme::kDirect:
        std::tie(c_dest, c_eav) = cap_direct(real, p);
        break;
      case Scheme::kSrs:
      case Scheme::kMrs: {
        const DecodingSet dset = decoding_set(real, p);
        if (!dset.empty()) {
          std::tie(c_dest, c_eav) = scheme == Scheme::kSrs
                                        ? srs_capacities(real, dset, p)
                                        : mrs_capacities(real, dset, p);
        }
        break;
      }
      case Scheme::kAn:
        std::tie(c_dest, c_eav) = an_capacities(real, p, rng);
        break;
    }
    counts.outages += c_dest < p.rate ? 1 : 0;
    counts.intercepts += c_eav > p.rate ? 1 : 0;
  }
  return counts;
}

}  // namespace

SimResult simulate(Scheme scheme, const SystemParams& p, std::uint64_t trials,
                   std::uint64_t seed, const SimOptions& opts) {
  require_valid(p);
  if (trials < 1) {
    throw std::invalid_argument("simulate: trials must be >= 1");
  }
  sensing_posterior(p);  // rejects parameters where the band is never sensed free
  if ((scheme == Scheme::kSrs || scheme == Scheme::kMrs) && p.n_relays < 1) {
    throw std::invalid_argument("simulate: relay schemes need n_relays >= 1");
  }
  if (scheme == Scheme::kAn && p.n_relays < 2) {
    throw std::invalid_argument(
        "simulate: the artificial-noise baseline needs n_relays >= 2");
  }

  unsigned workers = opts.workers > 0
                         ? static_cast<unsigned>(opts.workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, trials));

  std::vector<EventCounts> partial(workers);
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        partial[w] = run_chunk(scheme, p, begin, end, seed,
                               opts.rejection_sampling);
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  EventCounts total;
  for (const auto& c : partial) {
    total.outages += c.outages;
    total.intercepts += c.intercepts;
  }

  SimResult out;
  out.trials = trials;
  out.seed = seed;
  const double n = static_cast<double>(trials);
  out.op_hat = static_cast<double>(total.outages) / n;
  out.ip_hat = static_cast<double>(total.intercepts) / n;
  out.op_se = std::sqrt(out.op_hat * (1.0 - out.op_hat) / n);
  out.ip_se = std::sqrt(out.ip_hat * (1.0 - out.ip_hat) / n);
  return out;
}

}  // namespace srt
