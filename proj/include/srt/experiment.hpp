#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "srt/model.hpp"

namespace srt {

struct SweepGrid {
  double start_db = 0.0;
  double stop_db = 35.0;
  double step_db = 1.0;
};

struct SweepSpec {
  SystemParams base;  // gamma_s is overridden per grid point
  SweepGrid gamma_s_db;
  std::vector<Scheme> schemes;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  bool emit_analytic = true;
  bool emit_sim = true;
  int workers = 0;
  bool rejection_sampling = false;
  std::string variant;  // label suffix for figure families, e.g. "p0=0.2"
};

struct CurvePoint {
  double gamma_s_db = 0.0;
  std::optional<double> op_analytic;
  std::optional<double> ip_analytic;
  std::optional<double> op_sim;
  std::optional<double> ip_sim;
  std::optional<double> op_se;
  std::optional<double> ip_se;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string note;  // reason when a cell could not be computed
};

struct SrtCurve {
  Scheme scheme = Scheme::kDirect;
  std::string label;
  std::vector<CurvePoint> points;  // strictly increasing gamma_s_db
};

std::optional<std::string> check_spec(const SweepSpec& spec);

std::vector<double> grid_values(const SweepGrid& grid);

// Per-point simulation seed, a pure function of (master seed, scheme, grid
// value): any sub-grid of a sweep reproduces the full run's rows exactly.
std::uint64_t point_seed(std::uint64_t master, Scheme scheme,
                         double gamma_s_db);

// Runs every (scheme, grid point) cell. Failed cells keep their reason in
// CurvePoint::note instead of aborting the sweep.
std::vector<SrtCurve> run_sweep(const SweepSpec& spec);

struct OpIpPoint {
  double op = 0.0;
  double ip = 0.0;
};

// Interpolates IP at a fixed OP in log10-log10 space. Points must follow the
// sweep order and be strictly monotone in OP; the target must lie inside the
// covered OP range. Throws std::invalid_argument otherwise.
double ip_at_op(std::span<const OpIpPoint> points, double target_op);

// Convenience over a curve's analytic or simulated columns (skips points
// missing either value).
double ip_at_op(const SrtCurve& curve, double target_op, bool use_sim);

std::string csv_header();
void write_csv(const std::vector<SrtCurve>& curves, std::ostream& out);
void write_csv_file(const std::vector<SrtCurve>& curves,
                    const std::string& path);

// Sidecar metadata: spec hash, jammer-baseline design choices, version.
// Written next to the CSV with the extension replaced by ".meta".
void write_meta_file(const std::vector<SweepSpec>& specs,
                     const std::string& csv_path);
std::string meta_path_for(const std::string& csv_path);

// Built-in sweep families reproducing the four reference plots; see README.
// Valid names: fig3, fig4, fig5, fig6.
std::vector<SweepSpec> figure_specs(const std::string& name);

}  // namespace srt
