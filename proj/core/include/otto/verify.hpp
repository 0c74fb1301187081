#pragma once

// Seeded oracle-equivalence harness behind `otto verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "otto/correlations.hpp"

namespace otto {

struct VerifyCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;

  bool passed() const { return max_deviation <= tolerance; }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Lets tests swap the analytic discord for a deliberately broken one to
/// confirm the harness notices.
struct VerifyHooks {
  std::function<CorrelationReport(const XState&)> discord = discord_analytic;
};

/// Draws `ensemble` random points per check from std::mt19937_64(seed).
/// Spectrum and thermal checks use mu, omega in [0, 20], T in [0.05, 100];
/// the discord checks use mu, omega in [0, 12], T in [0.2, 20].
/// Throws std::invalid_argument when ensemble == 0.
VerifyReport run_verification(std::size_t ensemble, std::uint64_t seed,
                              const VerifyHooks& hooks = {});

}  // namespace otto
