#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otto/correlations.hpp"
#include "otto/cycle.hpp"

namespace otto {

/// Raised for sweep specifications that cannot produce a valid grid.
class SweepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SweepVariable {
  MuCommon,     // mu_H = mu_L = x
  OmegaCommon,  // omega_H = omega_L = x
  MuHot,
  MuCold,
  OmegaHot,
  OmegaCold,
  THot,
  TCold,
};

std::string_view to_string(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);
std::span<const std::string_view> sweep_variable_names();

struct SweepRange {
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::MuCommon;
  SweepRange range;
  CycleSpec fixed;
};

/// The fixed cycle with the swept knob(s) replaced by x.
CycleSpec apply(SweepVariable variable, double x, CycleSpec base);

/// Linearly spaced abscissas; the last point is exactly range.stop.
std::vector<double> sweep_grid(const SweepRange& range);

/// Validates the sweep and every per-point cycle; throws SweepError naming the
/// first offending point.
std::vector<CycleSpec> expand(const SweepSpec& spec);

struct SweepRow {
  double x = 0.0;
  CycleResult cycle;
  CorrelationReport hot;   // at (params_H, T_H)
  CorrelationReport cold;  // at (params_L, T_L)
};

SweepRow evaluate_point(double x, const CycleSpec& spec);

/// Evaluates every grid point; threads == 0 uses hardware concurrency.
/// Rows come back in grid order whatever the degree of parallelism.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

inline constexpr std::string_view kCsvHeader = "x,W,Q_in,Q_out,eta,regime,D_H,D_L,E_H,E_L";

/// %.12g; the one float format used for every CSV field.
std::string format_number(double v);
std::string csv_row(const SweepRow& row);
void write_csv(std::ostream& out, std::span<const SweepRow> rows);

/// One curve of a figure preset; file_stem names its CSV.
struct Curve {
  std::string file_stem;
  SweepSpec spec;
};

std::span<const std::string_view> preset_names();
/// Throws SweepError for an unknown name.
std::vector<Curve> figure_preset(std::string_view name);

}  // namespace otto
