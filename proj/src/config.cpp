#include "srt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace srt {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw std::runtime_error("config key '" + key + "': " + why);
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  if (!j.at(key).is_number()) {
    bad_key(key, "expected a number");
  }
  return j.at(key).get<double>();
}

std::vector<double> get_variance_vector(const json& sigma,
                                        const std::string& key, int n,
                                        double fallback) {
  std::vector<double> out(static_cast<std::size_t>(n), fallback);
  if (!sigma.contains(key)) {
    return out;
  }
  const json& v = sigma.at(key);
  if (v.is_number()) {
    out.assign(static_cast<std::size_t>(n), v.get<double>());
    return out;
  }
  if (v.is_array()) {
    if (v.size() != static_cast<std::size_t>(n)) {
      bad_key("sigma2." + key, "list length must equal n_relays");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) {
        bad_key("sigma2." + key, "list entries must be numbers");
      }
      out[i] = v[i].get<double>();
    }
    return out;
  }
  bad_key("sigma2." + key, "expected a number or a list");
}

}  // namespace

SweepSpec parse_sweep_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") +
                             e.what());
  }

  SweepSpec spec;
  SystemParams& p = spec.base;
  p.p0 = get_number(j, "p0", p.p0);
  p.pd = get_number(j, "pd", p.pd);
  p.pf = get_number(j, "pf", p.pf);
  p.gamma_p = db_to_linear(get_number(j, "gamma_p_db", 10.0));
  p.rate = get_number(j, "rate", p.rate);
  if (j.contains("n_relays")) {
    if (!j.at("n_relays").is_number_integer()) {
      bad_key("n_relays", "expected an integer");
    }
    p.n_relays = j.at("n_relays").get<int>();
  } else {
    p.n_relays = 6;
  }

  const json sigma = j.value("sigma2", json::object());
  p.variances.sd = get_number(sigma, "sd", 1.0);
  p.variances.se = get_number(sigma, "se", 0.1);
  p.variances.pd = get_number(sigma, "pd", 0.2);
  p.variances.pe = get_number(sigma, "pe", 0.2);
  p.variances.si = get_variance_vector(sigma, "si", p.n_relays, 1.0);
  p.variances.id = get_variance_vector(sigma, "id", p.n_relays, 1.0);
  p.variances.ie = get_variance_vector(sigma, "ie", p.n_relays, 0.1);
  p.variances.pi = get_variance_vector(sigma, "pi", p.n_relays, 0.2);

  if (j.contains("gamma_s_db")) {
    const json& g = j.at("gamma_s_db");
    if (g.is_number()) {
      const double v = g.get<double>();
      spec.gamma_s_db = {v, v, 1.0};
    } else if (g.is_object()) {
      spec.gamma_s_db.start_db = get_number(g, "start", 0.0);
      spec.gamma_s_db.stop_db = get_number(g, "stop", 35.0);
      spec.gamma_s_db.step_db = get_number(g, "step", 1.0);
    } else {
      bad_key("gamma_s_db", "expected a number or {start,stop,step}");
    }
  }

  if (j.contains("schemes")) {
    if (!j.at("schemes").is_array()) {
      bad_key("schemes", "expected a list of scheme names");
    }
    spec.schemes.clear();
    for (const auto& s : j.at("schemes")) {
      if (!s.is_string()) {
        bad_key("schemes", "entries must be strings");
      }
      const auto scheme = scheme_from_name(s.get<std::string>());
      if (!scheme) {
        bad_key("schemes", "unknown scheme '" + s.get<std::string>() +
                               "' (direct, srs, mrs, an)");
      }
      spec.schemes.push_back(*scheme);
    }
  } else {
    spec.schemes = {Scheme::kDirect, Scheme::kSrs, Scheme::kMrs, Scheme::kAn};
  }

  spec.trials =
      static_cast<std::uint64_t>(get_number(j, "trials", 1'000'000.0));
  spec.seed = static_cast<std::uint64_t>(get_number(j, "seed", 1.0));
  spec.workers = static_cast<int>(get_number(j, "workers", 0.0));
  if (j.contains("rejection_sampling")) {
    if (!j.at("rejection_sampling").is_boolean()) {
      bad_key("rejection_sampling", "expected a boolean");
    }
    spec.rejection_sampling = j.at("rejection_sampling").get<bool>();
  }
  if (j.contains("emit")) {
    const json& e = j.at("emit");
    spec.emit_analytic = e.value("analytic", true);
    spec.emit_sim = e.value("sim", true);
  }

  if (auto err = check_spec(spec)) {
    throw std::runtime_error("invalid config: " + *err);
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_spec(buf.str());
}

}  // namespace srt
