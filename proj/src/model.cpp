#include "srt/model.hpp"

#include <sstream>

namespace srt {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kDirect: return "direct";
    case Scheme::kSrs:    return "srs";
    case Scheme::kMrs:    return "mrs";
    case Scheme::kAn:     return "an";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
  if (name == "direct") return Scheme::kDirect;
  if (name == "srs") return Scheme::kSrs;
  if (name == "mrs") return Scheme::kMrs;
  if (name == "an") return Scheme::kAn;
  return std::nullopt;
}

bool LinkVariances::is_iid_relay_to_sd() const {
  for (const double v : id) {
    if (v != id.front()) {
      return false;
    }
  }
  return true;
}

LinkVariances LinkVariances::homogeneous(int n, double sd, double se,
                                         double pd, double pe, double si,
                                         double id, double ie, double pi) {
  LinkVariances v;
  v.sd = sd;
  v.se = se;
  v.pd = pd;
  v.pe = pe;
  const std::size_t count = n > 0 ? static_cast<std::size_t>(n) : 0;
  v.si.assign(count, si);
  v.id.assign(count, id);
  v.ie.assign(count, ie);
  v.pi.assign(count, pi);
  return v;
}

namespace {

bool is_prob(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

std::optional<std::string> check_variance_vector(const char* name,
                                                 const std::vector<double>& v,
                                                 int n_relays) {
  if (v.size() != static_cast<std::size_t>(n_relays)) {
    std::ostringstream os;
    os << "variances." << name << ": expected " << n_relays << " entries, got "
       << v.size();
    return os.str();
  }
  for (const double x : v) {
    if (!(std::isfinite(x) && x > 0.0)) {
      return std::string("variances.") + name + ": entries must be > 0";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_params(const SystemParams& p) {
  if (!is_prob(p.p0)) return "p0: must be in [0,1]";
  if (!is_prob(p.pd)) return "pd: must be in [0,1]";
  if (!is_prob(p.pf)) return "pf: must be in [0,1]";
  if (!(std::isfinite(p.gamma_p) && p.gamma_p >= 0.0)) {
    return "gamma_p: must be >= 0";
  }
  if (!(std::isfinite(p.gamma_s) && p.gamma_s >= 0.0)) {
    return "gamma_s: must be >= 0";
  }
  if (!(std::isfinite(p.rate) && p.rate > 0.0)) return "rate: must be > 0";
  if (p.n_relays < 0) return "n_relays: must be >= 0";
  if (p.n_relays > kMaxRelays) {
    std::ostringstream os;
    os << "n_relays: " << p.n_relays << " exceeds the closed-form limit of "
       << kMaxRelays << " (2^N decoding sets are enumerated)";
    return os.str();
  }
  if (!(std::isfinite(p.variances.sd) && p.variances.sd > 0.0)) {
    return "variances.sd: must be > 0";
  }
  if (!(std::isfinite(p.variances.se) && p.variances.se > 0.0)) {
    return "variances.se: must be > 0";
  }
  if (!(std::isfinite(p.variances.pd) && p.variances.pd > 0.0)) {
    return "variances.pd: must be > 0";
  }
  if (!(std::isfinite(p.variances.pe) && p.variances.pe > 0.0)) {
    return "variances.pe: must be > 0";
  }
  for (const auto& [name, vec] :
       {std::pair<const char*, const std::vector<double>*>{"si", &p.variances.si},
        {"id", &p.variances.id},
        {"ie", &p.variances.ie},
        {"pi", &p.variances.pi}}) {
    if (auto err = check_variance_vector(name, *vec, p.n_relays)) {
      return err;
    }
  }
  return std::nullopt;
}

void require_valid(const SystemParams& p) {
  if (auto err = check_params(p)) {
    throw std::invalid_argument("invalid parameters: " + *err);
  }
}

SensingPosterior sensing_posterior(double p0, double pd, double pf) {
  if (!(is_prob(p0) && is_prob(pd) && is_prob(pf))) {
    throw std::domain_error("sensing_posterior: inputs must be in [0,1]");
  }
  const double num = p0 * (1.0 - pf);
  const double den = num + (1.0 - p0) * (1.0 - pd);
  if (den <= 0.0) {
    throw std::domain_error(
        "sensing_posterior: the band is never sensed free under these "
        "parameters");
  }
  SensingPosterior out;
  out.pi0 = num / den;  // 0 when the numerator vanishes; still a valid conditional
  out.pi1 = 1.0 - out.pi0;
  return out;
}

Thresholds rate_thresholds(double rate, double gamma_s) {
  if (!(rate > 0.0)) {
    throw std::domain_error("rate_thresholds: rate must be > 0");
  }
  if (!(gamma_s > 0.0)) {
    throw std::domain_error(
        "rate_thresholds: gamma_s must be > 0 (the zero-power limit is "
        "handled at the sweep level)");
  }
  Thresholds t;
  t.delta = (std::exp2(rate) - 1.0) / gamma_s;
  t.lambda = (std::exp2(2.0 * rate) - 1.0) / gamma_s;
  return t;
}

}  // namespace srt
