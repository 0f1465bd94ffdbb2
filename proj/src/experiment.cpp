#include "srt/experiment.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "srt/analytic.hpp"
#include "srt/rng.hpp"
#include "srt/sim.hpp"

namespace srt {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string format_cell(const std::optional<double>& v) {
  return v ? format_value(*v) : std::string{};
}

}  // namespace

std::optional<std::string> check_spec(const SweepSpec& spec) {
  if (auto err = check_params(spec.base)) {
    return err;
  }
  if (!(spec.gamma_s_db.step_db > 0.0)) {
    return std::string("gamma_s_db.step: must be > 0");
  }
  if (!(spec.gamma_s_db.start_db <= spec.gamma_s_db.stop_db)) {
    return std::string("gamma_s_db: start must be <= stop");
  }
  if (spec.schemes.empty()) {
    return std::string("schemes: at least one scheme required");
  }
  if (!spec.emit_analytic && !spec.emit_sim) {
    return std::string("emit: at least one of analytic/sim required");
  }
  if (spec.emit_sim && spec.trials < 1) {
    return std::string("trials: must be >= 1 when simulation is enabled");
  }
  return std::nullopt;
}

std::vector<double> grid_values(const SweepGrid& grid) {
  const int count = static_cast<int>(
      std::floor((grid.stop_db - grid.start_db) / grid.step_db + 0.5)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    values.push_back(grid.start_db + i * grid.step_db);
  }
  return values;
}

std::uint64_t point_seed(std::uint64_t master, Scheme scheme,
                         double gamma_s_db) {
  std::uint64_t h = mix64(master ^ 0x5bf0f3c9a1b2d4e7ull);
  h = mix64(h + static_cast<std::uint64_t>(scheme) + 1);
  h = mix64(h ^ std::bit_cast<std::uint64_t>(gamma_s_db));
  return h;
}

std::vector<SrtCurve> run_sweep(const SweepSpec& spec) {
  if (auto err = check_spec(spec)) {
    throw std::invalid_argument("invalid sweep spec: " + *err);
  }
  const std::vector<double> grid = grid_values(spec.gamma_s_db);
  std::vector<SrtCurve> curves;
  curves.reserve(spec.schemes.size());
  for (const Scheme scheme : spec.schemes) {
    SrtCurve curve;
    curve.scheme = scheme;
    curve.label = scheme_name(scheme);
    if (!spec.variant.empty()) {
      curve.label += "@" + spec.variant;
    }
    curve.points.reserve(grid.size());
    for (const double db : grid) {
      SystemParams p = spec.base;
      p.gamma_s = db_to_linear(db);
      CurvePoint pt;
      pt.gamma_s_db = db;
      if (spec.emit_analytic && scheme != Scheme::kAn) {
        try {
          const AnalyticResult res = analyze(scheme, p);
          pt.op_analytic = res.op;
          pt.ip_analytic = res.ip;
        } catch (const std::exception& e) {
          pt.note = e.what();
        }
      }
      if (spec.emit_sim) {
        try {
          SimOptions opts;
          opts.workers = spec.workers;
          opts.rejection_sampling = spec.rejection_sampling;
          const SimResult res = simulate(
              scheme, p, spec.trials, point_seed(spec.seed, scheme, db), opts);
          pt.op_sim = res.op_hat;
          pt.ip_sim = res.ip_hat;
          pt.op_se = res.op_se;
          pt.ip_se = res.ip_se;
          pt.trials = res.trials;
          pt.seed = res.seed;
        } catch (const std::exception& e) {
          if (!pt.note.empty()) {
            pt.note += "; ";
          }
          pt.note += e.what();
        }
      }
      curve.points.push_back(std::move(pt));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

double ip_at_op(std::span<const OpIpPoint> points, double target_op) {
  if (points.size() < 2) {
    throw std::invalid_argument("ip_at_op: need at least two points");
  }
  if (!(target_op > 0.0)) {
    throw std::invalid_argument("ip_at_op: target OP must be > 0");
  }
  const bool decreasing = points[1].op < points[0].op;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const bool step_dec = points[i + 1].op < points[i].op;
    if (step_dec != decreasing || points[i + 1].op == points[i].op) {
      std::ostringstream os;
      os << "ip_at_op: OP is not strictly monotone between points " << i
         << " and " << i + 1;
      throw std::invalid_argument(os.str());
    }
    if (!(points[i].op > 0.0)) {
      throw std::invalid_argument("ip_at_op: OP values must be > 0");
    }
  }
  for (const auto& pt : points) {  // exact knots bypass the log transform
    if (pt.op == target_op) {
      return pt.ip;
    }
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i].op;
    const double b = points[i + 1].op;
    if ((target_op - a) * (target_op - b) < 0.0) {
      if (!(points[i].ip > 0.0 && points[i + 1].ip > 0.0)) {
        throw std::invalid_argument(
            "ip_at_op: IP must be positive at the bracketing points");
      }
      const double t = (std::log10(target_op) - std::log10(a)) /
                       (std::log10(b) - std::log10(a));
      const double log_ip = std::log10(points[i].ip) +
                            t * (std::log10(points[i + 1].ip) -
                                 std::log10(points[i].ip));
      return std::pow(10.0, log_ip);
    }
  }
  throw std::invalid_argument(
      "ip_at_op: target OP lies outside the curve's OP range");
}

double ip_at_op(const SrtCurve& curve, double target_op, bool use_sim) {
  std::vector<OpIpPoint> pts;
  pts.reserve(curve.points.size());
  for (const auto& pt : curve.points) {
    const auto& op = use_sim ? pt.op_sim : pt.op_analytic;
    const auto& ip = use_sim ? pt.ip_sim : pt.ip_analytic;
    if (op && ip) {
      pts.push_back({*op, *ip});
    }
  }
  return ip_at_op(pts, target_op);
}

std::string csv_header() {
  return "scheme,gamma_s_db,op_analytic,ip_analytic,op_sim,ip_sim,op_se,"
         "ip_se,trials,seed";
}

void write_csv(const std::vector<SrtCurve>& curves, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& curve : curves) {
    for (const auto& pt : curve.points) {
      out << curve.label << ',' << format_value(pt.gamma_s_db) << ','
          << format_cell(pt.op_analytic) << ',' << format_cell(pt.ip_analytic)
          << ',' << format_cell(pt.op_sim) << ',' << format_cell(pt.ip_sim)
          << ',' << format_cell(pt.op_se) << ',' << format_cell(pt.ip_se)
          << ',';
      if (pt.trials > 0) {
        out << pt.trials;
      }
      out << ',';
      if (pt.trials > 0) {
        out << pt.seed;
      }
      out << '\n';
    }
  }
}

void write_csv_file(const std::vector<SrtCurve>& curves,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  write_csv(curves, out);
}

namespace {

nlohmann::json spec_to_json(const SweepSpec& spec) {
  const auto& v = spec.base.variances;
  nlohmann::json j;
  j["p0"] = spec.base.p0;
  j["pd"] = spec.base.pd;
  j["pf"] = spec.base.pf;
  j["gamma_p_db"] = linear_to_db(spec.base.gamma_p);
  j["gamma_s_db"] = {{"start", spec.gamma_s_db.start_db},
                     {"stop", spec.gamma_s_db.stop_db},
                     {"step", spec.gamma_s_db.step_db}};
  j["rate"] = spec.base.rate;
  j["n_relays"] = spec.base.n_relays;
  j["sigma2"] = {{"sd", v.sd}, {"se", v.se}, {"pd", v.pd}, {"pe", v.pe},
                 {"si", v.si}, {"id", v.id}, {"ie", v.ie}, {"pi", v.pi}};
  j["trials"] = spec.trials;
  j["seed"] = spec.seed;
  nlohmann::json schemes = nlohmann::json::array();
  for (const Scheme s : spec.schemes) {
    schemes.push_back(scheme_name(s));
  }
  j["schemes"] = schemes;
  j["emit"] = {{"analytic", spec.emit_analytic}, {"sim", spec.emit_sim}};
  j["rejection_sampling"] = spec.rejection_sampling;
  if (!spec.variant.empty()) {
    j["variant"] = spec.variant;
  }
  return j;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : s) {
    h = (h ^ c) * 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string meta_path_for(const std::string& csv_path) {
  const auto dot = csv_path.find_last_of('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return csv_path + ".meta";
  }
  return csv_path.substr(0, dot) + ".meta";
}

void write_meta_file(const std::vector<SweepSpec>& specs,
                     const std::string& csv_path) {
  nlohmann::json meta;
  meta["version"] = kVersion;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& spec : specs) {
    arr.push_back(spec_to_json(spec));
  }
  meta["specs"] = arr;
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a(arr.dump())));
  meta["spec_hash"] = hash;
  // The jammer baseline leaves several design choices open; record the ones
  // this implementation fixes.
  meta["an_design"] = {
      {"power_split", "half to the direct signal, half to the jamming"},
      {"direction",
       "uniform on the unit sphere of the null space of the relay-to-"
       "destination channel vector"},
      {"time_slots", 1},
      {"jamming_relays", "all, regardless of decoding"},
      {"active_only_when_sensed_free", true}};
  std::ofstream out(meta_path_for(csv_path), std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open meta file for: " + csv_path);
  }
  out << meta.dump(2) << '\n';
}

namespace {

SystemParams figure_base(int n_relays) {
  SystemParams p;
  p.p0 = 0.8;
  p.pd = 0.99;
  p.pf = 0.01;
  p.gamma_p = db_to_linear(10.0);
  p.gamma_s = 1.0;  // overridden per grid point
  p.rate = 1.0;
  p.n_relays = n_relays;
  p.variances = LinkVariances::homogeneous(n_relays, 1.0, 0.1, 0.2, 0.2, 1.0,
                                           1.0, 0.1, 0.2);
  return p;
}

}  // namespace

std::vector<SweepSpec> figure_specs(const std::string& name) {
  std::vector<SweepSpec> specs;
  if (name == "fig3") {
    SweepSpec s;
    s.base = figure_base(6);
    s.gamma_s_db = {0.0, 35.0, 1.0};
    s.schemes = {Scheme::kDirect, Scheme::kSrs, Scheme::kMrs, Scheme::kAn};
    specs.push_back(std::move(s));
  } else if (name == "fig4") {
    for (const double p0 : {0.2, 0.8}) {
      SweepSpec s;
      s.base = figure_base(6);
      s.base.p0 = p0;
      s.gamma_s_db = {0.0, 30.0, 1.0};
      s.schemes = {Scheme::kSrs, Scheme::kMrs};
      std::ostringstream os;
      os << "p0=" << p0;
      s.variant = os.str();
      specs.push_back(std::move(s));
    }
  } else if (name == "fig5") {
    for (const auto& [pd, pf] :
         {std::pair{0.9, 0.1}, std::pair{0.99, 0.01}}) {
      SweepSpec s;
      s.base = figure_base(6);
      s.base.pd = pd;
      s.base.pf = pf;
      s.gamma_s_db = {0.0, 30.0, 1.0};
      s.schemes = {Scheme::kSrs, Scheme::kMrs};
      std::ostringstream os;
      os << "pd=" << pd << " pf=" << pf;
      s.variant = os.str();
      specs.push_back(std::move(s));
    }
  } else if (name == "fig6") {
    for (const int n : {2, 4, 8}) {
      SweepSpec s;
      s.base = figure_base(n);
      s.gamma_s_db = {0.0, 35.0, 1.0};
      s.schemes = {Scheme::kDirect, Scheme::kSrs, Scheme::kMrs};
      s.variant = "n=" + std::to_string(n);
      specs.push_back(std::move(s));
    }
  } else {
    throw std::invalid_argument("unknown figure name: " + name +
                                " (expected fig3, fig4, fig5 or fig6)");
  }
  return specs;
}

}  // namespace srt
