#include "otto/correlations.hpp"

#include <algorithm>
#include <cmath>

namespace otto {

namespace {

// -p log2(p / q), zero when p vanishes.
double conditional_term(double p, double q) {
  return (p > 0.0 && q > 0.0) ? -p * std::log2(p / q) : 0.0;
}

double clamp_round_off(double v) {
  return (v < 0.0 && v >= -kDiscordClampTolerance) ? 0.0 : v;
}

}  // namespace

double concurrence(const XState& x) {
  const double ad = std::max(0.0, x.a * x.d);
  const double branch_z = std::abs(x.z) - std::sqrt(ad);
  const double branch_w = std::abs(x.w) - x.b;
  return 2.0 * std::max({0.0, branch_z, branch_w});
}

double eof_from_concurrence(double c) {
  if (c <= 0.0) return 0.0;
  const double c2 = std::min(1.0, c * c);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c2)));
}

double eof(const XState& x) { return eof_from_concurrence(concurrence(x)); }

CorrelationReport discord_analytic(const XState& x) {
  CorrelationReport r;
  const double s_a = reduced_entropy(x);
  const double s_ab = von_neumann_entropy(x);

  const double cond_z = conditional_term(x.a, x.a + x.b) + conditional_term(x.b, x.a + x.b) +
                        conditional_term(x.d, x.b + x.d) + conditional_term(x.b, x.d + x.b);
  r.d1 = clamp_round_off(s_a - s_ab + cond_z);

  const double coherence = std::abs(x.z) + std::abs(x.w);
  r.gamma = std::min(1.0, std::sqrt((x.a - x.d) * (x.a - x.d) + 4.0 * coherence * coherence));
  r.delta_plus = 0.5 * (1.0 + r.gamma);
  r.delta_minus = 0.5 * (1.0 - r.gamma);
  r.d2 = clamp_round_off(s_a - s_ab + entropy_term(r.delta_plus) + entropy_term(r.delta_minus));

  r.discord = std::min(r.d1, r.d2);
  r.concurrence = concurrence(x);
  r.eof = eof_from_concurrence(r.concurrence);
  return r;
}

CorrelationReport correlations_at(const SubstanceParams& params, double temperature) {
  return discord_analytic(thermal_xstate(params, temperature));
}

}  // namespace otto
