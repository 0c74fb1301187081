// otto: command-line driver for the two-spin quantum Otto engine.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid invocation,
// 3 output could not be written.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "otto/correlations.hpp"
#include "otto/cycle.hpp"
#include "otto/spin_model.hpp"
#include "otto/sweep.hpp"
#include "otto/thermal.hpp"
#include "otto/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnwritable = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleFlags {
  double mu_h = 4.0;
  double mu_l = 1.0;
  double omega_h = 1.0;
  double omega_l = 1.0;
  double t_h = 4.0;
  double t_l = 1.0;

  void attach(CLI::App& app) {
    app.add_option("--mu-h", mu_h, "squeezing strength at the hot isochore")->capture_default_str();
    app.add_option("--mu-l", mu_l, "squeezing strength at the cold isochore")->capture_default_str();
    app.add_option("--omega-h", omega_h, "magnetic field at the hot isochore")->capture_default_str();
    app.add_option("--omega-l", omega_l, "magnetic field at the cold isochore")->capture_default_str();
    app.add_option("--t-h", t_h, "hot bath temperature")->capture_default_str();
    app.add_option("--t-l", t_l, "cold bath temperature")->capture_default_str();
  }

  otto::CycleSpec spec() const {
    return {{{mu_h, omega_h}, t_h}, {{mu_l, omega_l}, t_l}};
  }
};

std::string num(double v) { return otto::format_number(v); }

std::string fixed4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void require_knob(const std::string& flag, double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw UsageError(flag + " must be finite and >= 0 (got " + num(v) + ")");
  }
}

void require_temperature(const std::string& flag, double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw UsageError(flag + " must be finite and > 0 (got " + num(v) + ")");
  }
}

void validate_flags(const CycleFlags& f) {
  require_knob("--mu-h", f.mu_h);
  require_knob("--mu-l", f.mu_l);
  require_knob("--omega-h", f.omega_h);
  require_knob("--omega-l", f.omega_l);
  require_temperature("--t-h", f.t_h);
  require_temperature("--t-l", f.t_l);
  if (!(f.t_h > f.t_l)) {
    throw UsageError("--t-h (" + num(f.t_h) + ") must exceed --t-l (" + num(f.t_l) + ")");
  }
}

// key=value lines; '#' starts a comment line.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot read '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config: line " + std::to_string(lineno) + " is not key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Splices config values into the argument list right after the subcommand
// name, skipping any option the user already passed explicitly.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string config_path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) throw UsageError("--config needs a path");
      config_path = *std::next(it);
      it = args.erase(it, std::next(it, 2));
    } else if (it->rfind("--config=", 0) == 0) {
      config_path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (config_path.empty()) return args;

  const auto kv = read_config(config_path);
  auto sub_pos = args.end();
  CLI::App* sub = nullptr;
  for (auto it = args.begin(); it != args.end(); ++it) {
    for (CLI::App* candidate : app.get_subcommands([](CLI::App*) { return true; })) {
      if (candidate->get_name() == *it) {
        sub = candidate;
        sub_pos = it;
        break;
      }
    }
    if (sub) break;
  }
  if (!sub) return args;

  std::vector<std::string> injected;
  for (const auto& [key, value] : kv) {
    const std::string flag = "--" + key;
    bool known = false;
    for (CLI::App* candidate : app.get_subcommands([](CLI::App*) { return true; })) {
      if (candidate->get_option_no_throw(flag)) known = true;
    }
    if (!known) throw UsageError("--config: unknown key '" + key + "'");
    if (!sub->get_option_no_throw(flag) || given_on_command_line(args, flag)) continue;
    injected.push_back(flag);
    injected.push_back(value);
  }
  args.insert(std::next(sub_pos), injected.begin(), injected.end());
  return args;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  out.flush();
  return static_cast<bool>(out);
}

std::string render_csv(const std::vector<otto::SweepRow>& rows) {
  std::ostringstream os;
  otto::write_csv(os, rows);
  return os.str();
}

std::string join(const otto::StateVector& v) {
  std::string s;
  for (double x : v) {
    if (!s.empty()) s += ',';
    s += num(x);
  }
  return s;
}

int cmd_spectrum(double mu, double omega) {
  require_knob("--mu", mu);
  require_knob("--omega", omega);
  const otto::Spectrum s = otto::spectrum({mu, omega});
  const auto gaps = otto::energy_gaps(s);
  std::cout << "mu=" << num(mu) << "\nomega=" << num(omega) << "\nkappa=" << num(s.kappa)
            << "\na_minus=" << num(s.a_minus) << "\na_plus=" << num(s.a_plus) << '\n';
  for (std::size_t n = 0; n < 4; ++n) std::cout << 'E' << n + 1 << '=' << num(s.energies[n]) << '\n';
  for (std::size_t n = 0; n < 3; ++n) std::cout << "gap" << n + 1 << n + 2 << '=' << num(gaps[n]) << '\n';
  for (std::size_t n = 0; n < 4; ++n) std::cout << "psi" << n + 1 << '=' << join(s.eigenvectors[n]) << '\n';
  return kExitOk;
}

int cmd_thermal(double mu, double omega, double t) {
  require_knob("--mu", mu);
  require_knob("--omega", omega);
  require_temperature("--t", t);
  const otto::Spectrum s = otto::spectrum({mu, omega});
  const otto::Populations p = otto::populations(s, t);
  const otto::XState x = otto::xstate_from(s, p);
  const otto::CorrelationReport c = otto::discord_analytic(x);
  for (std::size_t n = 0; n < 4; ++n) std::cout << 'p' << n + 1 << '=' << num(p.p[n]) << '\n';
  std::cout << "log_z=" << num(p.log_z) << "\na=" << num(x.a) << "\nb=" << num(x.b)
            << "\nd=" << num(x.d) << "\nw=" << num(x.w) << "\nz=" << num(x.z)
            << "\nentropy=" << num(otto::von_neumann_entropy(p))
            << "\nreduced_entropy=" << num(otto::reduced_entropy(x))
            << "\nconcurrence=" << num(c.concurrence) << "\neof=" << num(c.eof)
            << "\ndiscord=" << num(c.discord) << "\nd1=" << num(c.d1) << "\nd2=" << num(c.d2)
            << '\n';
  return kExitOk;
}

int cmd_cycle(const CycleFlags& flags, bool kv) {
  validate_flags(flags);
  const otto::CycleSpec spec = flags.spec();
  const otto::SweepRow row = otto::evaluate_point(0.0, spec);
  const auto& r = row.cycle;
  std::cout << "W=" << fixed4(r.work) << " Q_in=" << fixed4(r.q_in) << " Q_out=" << fixed4(r.q_out)
            << " eta=" << (r.efficiency ? fixed4(*r.efficiency) : std::string("n/a"))
            << " regime=" << otto::regime_token(r.regime) << " D_H=" << fixed4(row.hot.discord)
            << " D_L=" << fixed4(row.cold.discord) << " E_H=" << fixed4(row.hot.eof)
            << " E_L=" << fixed4(row.cold.eof) << '\n';
  if (kv) {
    std::cout << "W=" << num(r.work) << "\nQ_in=" << num(r.q_in) << "\nQ_out=" << num(r.q_out)
              << "\neta=" << (r.efficiency ? num(*r.efficiency) : std::string("n/a"))
              << "\neta_carnot=" << num(otto::carnot_efficiency(spec))
              << "\nregime=" << otto::regime_token(r.regime) << "\nD_H=" << num(row.hot.discord)
              << "\nD_L=" << num(row.cold.discord) << "\nE_H=" << num(row.hot.eof)
              << "\nE_L=" << num(row.cold.eof) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-spin one-axis-twisting quantum Otto engine", "otto"};
  app.require_subcommand(1);
  app.add_option("--config", "key=value file merged before flags (flags win)");

  double mu = 0.0, omega = 0.0, temperature = 1.0;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "energies and eigenvectors at one (mu, omega)");
  spectrum_cmd->add_option("--mu", mu)->capture_default_str();
  spectrum_cmd->add_option("--omega", omega)->capture_default_str();

  auto* thermal_cmd = app.add_subcommand("thermal", "Gibbs state and correlations at one point");
  thermal_cmd->add_option("--mu", mu)->capture_default_str();
  thermal_cmd->add_option("--omega", omega)->capture_default_str();
  thermal_cmd->add_option("--t", temperature, "temperature")->capture_default_str();

  CycleFlags cycle_flags;
  bool kv = false;
  auto* cycle_cmd = app.add_subcommand("cycle", "evaluate one Otto cycle");
  cycle_flags.attach(*cycle_cmd);
  cycle_cmd->add_flag("--kv", kv, "also print a key=value block at full precision");

  CycleFlags sweep_flags;
  std::string var, out;
  double from = 0.0, to = 1.0;
  int points = 0;
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one knob and write CSV");
  sweep_flags.attach(*sweep_cmd);
  sweep_cmd->add_option("--var", var, "swept knob")->required();
  sweep_cmd->add_option("--from", from, "first grid value")->required();
  sweep_cmd->add_option("--to", to, "last grid value")->required();
  sweep_cmd->add_option("--points", points, "number of grid points (>= 2)")->required();
  sweep_cmd->add_option("--out", out, "CSV path (stdout when omitted)");
  sweep_cmd->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();

  std::string preset, out_dir = ".";
  auto* figure_cmd = app.add_subcommand("figure", "run a figure preset, one CSV per curve");
  figure_cmd->add_option("name", preset, "fig2a|fig2b|fig3|fig4|fig5")->required();
  figure_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  figure_cmd->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();

  long long ensemble = 100;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "seeded oracle-equivalence checks");
  verify_cmd->add_option("--n", ensemble, "ensemble size")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "64-bit seed")->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(mu, omega);
    if (*thermal_cmd) return cmd_thermal(mu, omega, temperature);
    if (*cycle_cmd) return cmd_cycle(cycle_flags, kv);

    if (*sweep_cmd) {
      const auto variable = otto::parse_sweep_variable(var);
      if (!variable) throw UsageError("--var: unknown variable '" + var + "'");
      if (points < 2) throw UsageError("--points must be >= 2 (got " + std::to_string(points) + ")");
      if (from > to) throw UsageError("--from must not exceed --to");
      validate_flags(sweep_flags);
      const otto::SweepSpec spec{*variable, {from, to, points}, sweep_flags.spec()};
      otto::expand(spec);
      const std::string csv = render_csv(otto::run_sweep(spec, threads));
      if (out.empty()) {
        std::cout << csv;
      } else if (!write_text(out, csv)) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return kExitUnwritable;
      }
      return kExitOk;
    }

    if (*figure_cmd) {
      const auto curves = otto::figure_preset(preset);
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      for (const auto& curve : curves) {
        const auto path = (std::filesystem::path(out_dir) / (curve.file_stem + ".csv")).string();
        if (!write_text(path, render_csv(otto::run_sweep(curve.spec, threads)))) {
          std::cerr << "error: cannot write '" << path << "'\n";
          return kExitUnwritable;
        }
        std::cout << path << '\n';
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      if (ensemble < 1) throw UsageError("--n must be >= 1 (got " + std::to_string(ensemble) + ")");
      const otto::VerifyReport report =
          otto::run_verification(static_cast<std::size_t>(ensemble), seed);
      for (const auto& c : report.checks) {
        std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << ": max_dev=" << num(c.max_deviation)
                  << " tol=" << num(c.tolerance) << " n=" << c.samples << '\n';
      }
      std::cout << (report.passed() ? "verify: all checks passed" : "verify: FAILED") << '\n';
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const otto::SweepError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
