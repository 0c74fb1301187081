#pragma once

// Four-stroke quantum Otto cycle between two thermal endpoints.
//
// Stage 1 thermalizes at (params_H, T_H), stage 2 changes the Hamiltonian to
// params_L at fixed populations, stage 3 thermalizes at (params_L, T_L) and
// stage 4 returns to params_H. Levels are paired across the adiabats by
// their sorted index, which is also the adiabatic-continuation order because
// levels never cross for mu, omega >= 0.

#include <optional>
#include <string_view>

#include "otto/spin_model.hpp"
#include "otto/thermal.hpp"

namespace otto {

inline constexpr double kRegimeTolerance = 1e-12;

struct BathEndpoint {
  SubstanceParams params;
  double temperature = 1.0;
};

struct CycleSpec {
  BathEndpoint hot;
  BathEndpoint cold;
};

/// Throws std::invalid_argument on invalid params or T_H <= T_L.
void validate(const CycleSpec& spec);

enum class Regime {
  PositiveWork,        // Q_in > -Q_out > 0
  NoOperation,
  SecondLawExcludedA,  // Q_in > Q_out > 0
  SecondLawExcludedB,  // Q_out > -Q_in > 0
};

/// Short CSV token: pw, none, viol-a, viol-b.
std::string_view regime_token(Regime regime);

/// Signed heats with Q_out <= 0 when heat is released; work = q_in + q_out.
struct HeatFlows {
  double q_in = 0.0;
  double q_out = 0.0;
  double work = 0.0;
};

/// Heats for a cycle whose first isochore is at (e_first, t_first). No
/// ordering is imposed on the temperatures, so swapped endpoints are allowed.
HeatFlows heat_flows(const Levels& e_first, double t_first,
                     const Levels& e_second, double t_second);
HeatFlows heat_flows(const BathEndpoint& first, const BathEndpoint& second);

Regime classify_regime(double q_in, double q_out, double tol = kRegimeTolerance);

struct CycleResult {
  double q_in = 0.0;
  double q_out = 0.0;
  double work = 0.0;
  std::optional<double> efficiency;  // present iff regime == PositiveWork
  Regime regime = Regime::NoOperation;
};

CycleResult evaluate_cycle(const CycleSpec& spec);

/// 1 - T_L / T_H.
double carnot_efficiency(const CycleSpec& spec);

}  // namespace otto
