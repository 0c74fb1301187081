#include "otto/cycle.hpp"

#include <stdexcept>
#include <string>

namespace otto {

void validate(const CycleSpec& spec) {
  validate(spec.hot.params);
  validate(spec.cold.params);
  validate_temperature(spec.hot.temperature);
  validate_temperature(spec.cold.temperature);
  if (!(spec.hot.temperature > spec.cold.temperature)) {
    throw std::invalid_argument("hot bath temperature must exceed cold bath temperature (T_H=" +
                                std::to_string(spec.hot.temperature) +
                                ", T_L=" + std::to_string(spec.cold.temperature) + ")");
  }
}

std::string_view regime_token(Regime regime) {
  switch (regime) {
    case Regime::PositiveWork: return "pw";
    case Regime::NoOperation: return "none";
    case Regime::SecondLawExcludedA: return "viol-a";
    case Regime::SecondLawExcludedB: return "viol-b";
  }
  return "none";
}

HeatFlows heat_flows(const Levels& e_first, double t_first,
                     const Levels& e_second, double t_second) {
  const Populations p1 = populations(e_first, t_first);
  const Populations p2 = populations(e_second, t_second);

  HeatFlows h;
  for (std::size_t n = 0; n < 4; ++n) {
    const double dp = p1.p[n] - p2.p[n];
    h.q_in += e_first[n] * dp;
    h.q_out -= e_second[n] * dp;
  }
  h.work = h.q_in + h.q_out;
  return h;
}

HeatFlows heat_flows(const BathEndpoint& first, const BathEndpoint& second) {
  return heat_flows(spectrum(first.params).energies, first.temperature,
                    spectrum(second.params).energies, second.temperature);
}

Regime classify_regime(double q_in, double q_out, double tol) {
  if (q_in + q_out > tol && -q_out > tol) return Regime::PositiveWork;
  if (q_in - q_out > tol && q_out > tol) return Regime::SecondLawExcludedA;
  if (q_out + q_in > tol && -q_in > tol) return Regime::SecondLawExcludedB;
  return Regime::NoOperation;
}

CycleResult evaluate_cycle(const CycleSpec& spec) {
  validate(spec);
  const HeatFlows h = heat_flows(spec.hot, spec.cold);

  CycleResult r;
  r.q_in = h.q_in;
  r.q_out = h.q_out;
  r.work = h.work;
  r.regime = classify_regime(h.q_in, h.q_out);
  if (r.regime == Regime::PositiveWork) r.efficiency = h.work / h.q_in;
  return r;
}

double carnot_efficiency(const CycleSpec& spec) {
  validate(spec);
  return 1.0 - spec.cold.temperature / spec.hot.temperature;
}

}  // namespace otto
