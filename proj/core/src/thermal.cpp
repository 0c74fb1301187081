#include "otto/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace otto {

void validate_temperature(double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw std::invalid_argument("temperature must be finite and > 0, got " +
                                std::to_string(temperature));
  }
}

Populations populations(const Levels& energies, double temperature) {
  validate_temperature(temperature);
  for (double e : energies) {
    if (!std::isfinite(e)) throw std::invalid_argument("energy level is not finite");
  }

  Populations out;
  out.shift = *std::min_element(energies.begin(), energies.end());
  double z_shifted = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    out.p[n] = std::exp(-(energies[n] - out.shift) / temperature);
    z_shifted += out.p[n];
  }
  for (double& p : out.p) p /= z_shifted;
  out.log_z = std::log(z_shifted) - out.shift / temperature;
  return out;
}

Populations populations(const Spectrum& spec, double temperature) {
  return populations(spec.energies, temperature);
}

XState xstate_from(const Spectrum& spec, const Populations& pops) {
  const auto& p = pops.p;
  const double t = spec.mixing;
  const double norm2 = 1.0 + t * t;

  XState x;
  x.a = (p[0] * t * t + p[3]) / norm2;
  x.d = (p[0] + p[3] * t * t) / norm2;
  x.w = t * (p[3] - p[0]) / norm2;
  x.b = 0.5 * (p[1] + p[2]);
  x.z = 0.5 * (p[2] - p[1]);
  return x;
}

XState thermal_xstate(const SubstanceParams& params, double temperature) {
  validate_temperature(temperature);
  const Spectrum spec = spectrum(params);
  return xstate_from(spec, populations(spec, temperature));
}

std::array<double, 4> xstate_eigenvalues(const XState& x) {
  const double mean = 0.5 * (x.a + x.d);
  const double radius = std::hypot(0.5 * (x.a - x.d), x.w);
  return {x.b + x.z, x.b - x.z, mean + radius, mean - radius};
}

double entropy_term(double x) {
  return x > 0.0 ? -x * std::log2(x) : 0.0;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) s += entropy_term(p);
  return s;
}

double binary_entropy(double x) {
  return entropy_term(x) + entropy_term(1.0 - x);
}

double von_neumann_entropy(const Populations& pops) {
  return shannon_entropy(pops.p);
}

double von_neumann_entropy(const XState& x) {
  return shannon_entropy(xstate_eigenvalues(x));
}

double reduced_entropy(const XState& x) {
  return binary_entropy(x.a + x.b);
}

}  // namespace otto
