#include "otto/spin_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace otto {

void validate(const SubstanceParams& params) {
  if (!std::isfinite(params.mu) || params.mu < 0.0) {
    throw std::invalid_argument("mu must be finite and >= 0, got " +
                                std::to_string(params.mu));
  }
  if (!std::isfinite(params.omega) || params.omega < 0.0) {
    throw std::invalid_argument("omega must be finite and >= 0, got " +
                                std::to_string(params.omega));
  }
}

Spectrum spectrum(const SubstanceParams& params) {
  validate(params);
  const double mu = params.mu;
  const double omega = params.omega;

  Spectrum s;
  s.kappa = std::hypot(mu, 2.0 * omega);
  const double sum = 2.0 * omega + s.kappa;

  // (mu - kappa)(mu + kappa) = -4 omega^2 avoids cancellation when omega << mu.
  const double e1 = (omega > 0.0) ? -2.0 * omega * omega / (mu + s.kappa) : 0.0;
  s.energies = {e1, 0.0, mu, 0.5 * (mu + s.kappa)};

  // 2 omega - kappa = -mu^2 / (2 omega + kappa)
  const double diff = (sum > 0.0) ? -mu * mu / sum : 0.0;
  s.a_minus = std::hypot(mu, diff);
  s.a_plus = std::hypot(mu, sum);

  // At mu = omega = 0 every basis is an eigenbasis; t = 0 picks the
  // {|00>, singlet, triplet-0, |11>} limit.
  s.mixing = (sum > 0.0) ? mu / sum : 0.0;
  const double norm = std::hypot(1.0, s.mixing);
  const double c = 1.0 / norm;
  const double t = s.mixing / norm;
  const double r = std::sqrt(0.5);

  using namespace basis;
  StateVector psi1{}, psi2{}, psi3{}, psi4{};
  psi1[k00] = c;
  psi1[k11] = -t;
  psi2[k10] = r;
  psi2[k01] = -r;
  psi3[k10] = r;
  psi3[k01] = r;
  psi4[k00] = t;
  psi4[k11] = c;
  s.eigenvectors = {psi1, psi2, psi3, psi4};
  return s;
}

std::array<double, 3> energy_gaps(const Spectrum& spec) {
  const auto& e = spec.energies;
  return {e[1] - e[0], e[2] - e[1], e[3] - e[2]};
}

}  // namespace otto
