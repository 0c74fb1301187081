#include "otto/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace otto {

namespace {

constexpr std::array<std::string_view, 8> kVariableNames{
    "mu_common", "omega_common", "mu_hot", "mu_cold",
    "omega_hot", "omega_cold",   "t_hot",  "t_cold",
};

constexpr std::array<std::string_view, 5> kPresetNames{"fig2a", "fig2b", "fig3", "fig4", "fig5"};

CycleSpec make_cycle(double mu_h, double omega_h, double t_h,
                     double mu_l, double omega_l, double t_l) {
  return {{{mu_h, omega_h}, t_h}, {{mu_l, omega_l}, t_l}};
}

// Drops trailing zeros so 0.5 -> "0.5" and 2 -> "2" in file names.
std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  return kVariableNames[static_cast<std::size_t>(v)];
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  for (std::size_t i = 0; i < kVariableNames.size(); ++i) {
    if (kVariableNames[i] == name) return static_cast<SweepVariable>(i);
  }
  return std::nullopt;
}

std::span<const std::string_view> sweep_variable_names() { return kVariableNames; }

CycleSpec apply(SweepVariable variable, double x, CycleSpec base) {
  switch (variable) {
    case SweepVariable::MuCommon:
      base.hot.params.mu = base.cold.params.mu = x;
      break;
    case SweepVariable::OmegaCommon:
      base.hot.params.omega = base.cold.params.omega = x;
      break;
    case SweepVariable::MuHot: base.hot.params.mu = x; break;
    case SweepVariable::MuCold: base.cold.params.mu = x; break;
    case SweepVariable::OmegaHot: base.hot.params.omega = x; break;
    case SweepVariable::OmegaCold: base.cold.params.omega = x; break;
    case SweepVariable::THot: base.hot.temperature = x; break;
    case SweepVariable::TCold: base.cold.temperature = x; break;
  }
  return base;
}

std::vector<double> sweep_grid(const SweepRange& range) {
  if (!std::isfinite(range.start) || !std::isfinite(range.stop)) {
    throw SweepError("sweep range must be finite");
  }
  if (range.points < 2) {
    throw SweepError("sweep needs at least 2 points, got " + std::to_string(range.points));
  }
  if (range.start > range.stop) {
    throw SweepError("sweep start must not exceed stop");
  }
  const auto n = static_cast<std::size_t>(range.points);
  std::vector<double> xs(n);
  const double span = range.stop - range.start;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = range.start + span * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  xs.back() = range.stop;
  return xs;
}

std::vector<CycleSpec> expand(const SweepSpec& spec) {
  const std::vector<double> xs = sweep_grid(spec.range);
  std::vector<CycleSpec> cycles;
  cycles.reserve(xs.size());
  for (double x : xs) {
    CycleSpec c = apply(spec.variable, x, spec.fixed);
    try {
      validate(c);
    } catch (const std::invalid_argument& e) {
      throw SweepError("sweep point " + std::string(to_string(spec.variable)) + "=" +
                       format_number(x) + " is invalid: " + e.what());
    }
    cycles.push_back(c);
  }
  return cycles;
}

SweepRow evaluate_point(double x, const CycleSpec& spec) {
  SweepRow row;
  row.x = x;
  row.cycle = evaluate_cycle(spec);
  row.hot = correlations_at(spec.hot.params, spec.hot.temperature);
  row.cold = correlations_at(spec.cold.params, spec.cold.temperature);
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<double> xs = sweep_grid(spec.range);
  const std::vector<CycleSpec> cycles = expand(spec);
  std::vector<SweepRow> rows(cycles.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i] = evaluate_point(xs[i], cycles[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_row(const SweepRow& row) {
  std::string line;
  line.reserve(160);
  auto field = [&line](const std::string& s) {
    if (!line.empty()) line += ',';
    line += s;
  };
  line += format_number(row.x);
  field(format_number(row.cycle.work));
  field(format_number(row.cycle.q_in));
  field(format_number(row.cycle.q_out));
  line += ',';
  if (row.cycle.efficiency) line += format_number(*row.cycle.efficiency);
  field(std::string(regime_token(row.cycle.regime)));
  field(format_number(row.hot.discord));
  field(format_number(row.cold.discord));
  field(format_number(row.hot.eof));
  field(format_number(row.cold.eof));
  return line;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& row : rows) out << csv_row(row) << '\n';
}

std::span<const std::string_view> preset_names() { return kPresetNames; }

std::vector<Curve> figure_preset(std::string_view name) {
  std::vector<Curve> curves;
  if (name == "fig2a") {
    curves.push_back({"fig2a", {SweepVariable::MuCommon, {0.0, 6.0, 201},
                                make_cycle(0.0, 4.0, 4.0, 0.0, 1.0, 1.0)}});
  } else if (name == "fig2b") {
    curves.push_back({"fig2b", {SweepVariable::OmegaCommon, {0.0, 3.0, 201},
                                make_cycle(4.0, 0.0, 4.0, 1.0, 0.0, 1.0)}});
  } else if (name == "fig3") {
    for (double omega : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      curves.push_back({"fig3_omega_" + short_number(omega),
                        {SweepVariable::THot, {1.05, 10.0, 180},
                         make_cycle(4.0, omega, 4.0, 1.0, omega, 1.0)}});
    }
  } else if (name == "fig4") {
    for (double omega : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      curves.push_back({"fig4_omega_" + short_number(omega),
                        {SweepVariable::MuHot, {1.0, 12.0, 221},
                         make_cycle(1.0, omega, 4.0, 1.0, omega, 1.0)}});
    }
  } else if (name == "fig5") {
    for (double omega : {7.0, 8.0, 9.0, 10.0, 11.0}) {
      curves.push_back({"fig5_omega_" + short_number(omega),
                        {SweepVariable::MuCold, {10.0, 60.0, 201},
                         make_cycle(10.0, omega, 4.0, 10.0, omega, 1.0)}});
    }
  } else {
    std::string valid;
    for (auto n : kPresetNames) {
      if (!valid.empty()) valid += ", ";
      valid += n;
    }
    throw SweepError("unknown figure preset '" + std::string(name) + "' (valid: " + valid + ")");
  }
  return curves;
}

}  // namespace otto
