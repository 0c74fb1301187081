#pragma once

#include "otto/spin_model.hpp"
#include "otto/thermal.hpp"

namespace otto {

/// Negative round-off down to this size is clamped to zero.
inline constexpr double kDiscordClampTolerance = 1e-12;

/// Quantum correlations of one X state.
///
/// d1 is the discord candidate from a sigma_z measurement on one qubit, d2
/// the candidate from a measurement in the equatorial plane; the discord is
/// their minimum.
struct CorrelationReport {
  double discord = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double gamma = 0.0;
  double delta_plus = 0.5;
  double delta_minus = 0.5;
};

/// C = 2 max{0, |z| - sqrt(a d), |w| - b}.
double concurrence(const XState& x);

/// h[(1 + sqrt(1 - C^2)) / 2].
double eof_from_concurrence(double c);
double eof(const XState& x);

CorrelationReport discord_analytic(const XState& x);

/// Thermal state at (params, T) followed by discord_analytic.
CorrelationReport correlations_at(const SubstanceParams& params, double temperature);

}  // namespace otto
