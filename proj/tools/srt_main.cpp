// Command line front end: parameter sweeps, single points, analytic-vs-
// simulation validation, and the built-in figure reproductions.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "srt/analytic.hpp"
#include "srt/config.hpp"
#include "srt/experiment.hpp"
#include "srt/model.hpp"
#include "srt/sim.hpp"

namespace {

using namespace srt;

struct CommonOverrides {
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;

  void apply(SweepSpec& spec) const {
    if (trials) spec.trials = *trials;
    if (seed) spec.seed = *seed;
    if (workers) spec.workers = *workers;
  }
};

int run_sweep_to_files(std::vector<SweepSpec> specs, const std::string& out) {
  std::vector<SrtCurve> all;
  for (const auto& spec : specs) {
    auto curves = run_sweep(spec);
    for (auto& c : curves) {
      all.push_back(std::move(c));
    }
  }
  write_csv_file(all, out);
  write_meta_file(specs, out);
  std::size_t failed = 0;
  for (const auto& c : all) {
    for (const auto& pt : c.points) {
      if (!pt.note.empty()) {
        std::cerr << "note: " << c.label << " @ " << pt.gamma_s_db
                  << " dB: " << pt.note << "\n";
        ++failed;
      }
    }
  }
  std::cerr << "wrote " << out << " and " << meta_path_for(out);
  if (failed > 0) {
    std::cerr << " (" << failed << " cells skipped)";
  }
  std::cerr << "\n";
  return 0;
}

// Agreement gate between a simulated estimate and its closed-form value. The
// reference-based standard error keeps the gate meaningful when no event was
// observed in the simulated sample.
bool agrees(double sim, double analytic, double se, std::uint64_t trials) {
  const double se_ref =
      std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(trials));
  return std::abs(sim - analytic) <= 3.9 * std::max(se, se_ref);
}

int run_validate(const SweepSpec& spec) {
  int failures = 0;
  int checks = 0;
  for (const Scheme scheme : spec.schemes) {
    if (scheme == Scheme::kAn) {
      std::cout << "SKIP  an: no closed form to validate against\n";
      continue;
    }
    for (const double db : grid_values(spec.gamma_s_db)) {
      SystemParams p = spec.base;
      p.gamma_s = db_to_linear(db);
      AnalyticResult ref;
      SimResult sim;
      try {
        ref = analyze(scheme, p);
        SimOptions opts;
        opts.workers = spec.workers;
        opts.rejection_sampling = spec.rejection_sampling;
        sim = simulate(scheme, p, spec.trials, point_seed(spec.seed, scheme, db),
                       opts);
      } catch (const std::exception& e) {
        std::cout << "FAIL  " << scheme_name(scheme) << " @ " << db
                  << " dB: " << e.what() << "\n";
        ++failures;
        continue;
      }
      const bool op_ok = agrees(sim.op_hat, ref.op, sim.op_se, sim.trials);
      bool ip_ok = true;
      std::string ip_part = " ip: n/a";
      if (ref.ip) {
        ip_ok = agrees(sim.ip_hat, *ref.ip, sim.ip_se, sim.trials);
        char buf[96];
        std::snprintf(buf, sizeof(buf), " ip: %.4g vs %.4g", sim.ip_hat,
                      *ref.ip);
        ip_part = buf;
      }
      ++checks;
      if (!op_ok || !ip_ok) {
        ++failures;
      }
      char buf[96];
      std::snprintf(buf, sizeof(buf), "op: %.4g vs %.4g", sim.op_hat, ref.op);
      std::cout << (op_ok && ip_ok ? "PASS  " : "FAIL  ")
                << scheme_name(scheme) << " @ " << db << " dB  " << buf
                << ip_part << "\n";
    }
  }
  std::cout << (failures == 0 ? "validation passed, " : "validation FAILED, ")
            << checks << " points checked\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security-reliability trade-off curves for cognitive relay "
               "transmission: closed forms and Monte Carlo"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  CommonOverrides common;

  auto* sweep = app.add_subcommand("sweep", "run the sweep from a config file");
  sweep->add_option("--config", config_path, "JSON config file")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  std::string point_scheme;
  double point_db = 10.0;
  bool point_no_sim = false;
  auto* point = app.add_subcommand("point", "evaluate a single grid point");
  point->add_option("--scheme", point_scheme, "direct|srs|mrs|an")
      ->required()
      ->check(CLI::IsMember({"direct", "srs", "mrs", "an"}));
  point->add_option("--gamma-s-db", point_db, "secondary SNR in dB")
      ->required();
  point->add_option("--config", config_path, "base config (default: fig3)");
  point->add_flag("--analytic-only", point_no_sim, "skip the simulation");
  point->add_option("--trials", common.trials, "Monte Carlo trials");
  point->add_option("--seed", common.seed, "master seed");
  point->add_option("--workers", common.workers, "worker threads");

  auto* validate =
      app.add_subcommand("validate", "check simulation against closed forms");
  validate->add_option("--config", config_path, "JSON config file")->required();
  validate->add_option("--trials", common.trials, "Monte Carlo trials");
  validate->add_option("--seed", common.seed, "master seed");
  validate->add_option("--workers", common.workers, "worker threads");

  std::string figure_name;
  auto* figure =
      app.add_subcommand("figure", "reproduce a built-in curve family");
  figure->add_option("--name", figure_name, "fig3|fig4|fig5|fig6")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6"}));
  figure->add_option("--out", out_path, "output CSV (default: <name>.csv)");
  figure->add_option("--trials", common.trials, "Monte Carlo trials per point");
  figure->add_option("--seed", common.seed, "master seed");
  figure->add_option("--workers", common.workers, "worker threads");
  bool figure_no_sim = false;
  figure->add_flag("--analytic-only", figure_no_sim, "skip the simulation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep_to_files({load_sweep_spec(config_path)}, out_path);
    }
    if (point->parsed()) {
      SweepSpec spec = config_path.empty() ? figure_specs("fig3").front()
                                           : load_sweep_spec(config_path);
      spec.schemes = {*scheme_from_name(point_scheme)};
      spec.gamma_s_db = {point_db, point_db, 1.0};
      spec.variant.clear();
      common.apply(spec);
      if (point_no_sim) {
        spec.emit_sim = false;
        spec.emit_analytic = true;
      }
      const auto curves = run_sweep(spec);
      write_csv(curves, std::cout);
      for (const auto& pt : curves.front().points) {
        if (!pt.note.empty()) {
          std::cerr << "note: " << pt.note << "\n";
        }
      }
      return 0;
    }
    if (validate->parsed()) {
      SweepSpec spec = load_sweep_spec(config_path);
      common.apply(spec);
      return run_validate(spec);
    }
    if (figure->parsed()) {
      auto specs = figure_specs(figure_name);
      for (auto& spec : specs) {
        common.apply(spec);
        if (figure_no_sim) {
          spec.emit_sim = false;
        }
      }
      if (out_path.empty()) {
        out_path = figure_name + ".csv";
      }
      return run_sweep_to_files(std::move(specs), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
