#pragma once

// Closed-form spectrum of the two-spin one-axis-twisting Hamiltonian
//
//   H = mu * Sx^2 + omega * Sz,   S_a = (sigma_a^1 + sigma_a^2) / 2
//
// All state vectors and matrices in this library use the fixed standard basis
// ordering {|11>, |10>, |01>, |00>}, with |0> the lower-energy single-spin
// state of the Zeeman term. Units: k_B = hbar = 1.

#include <array>
#include <cstddef>

namespace otto {

namespace basis {
inline constexpr std::size_t k11 = 0;
inline constexpr std::size_t k10 = 1;
inline constexpr std::size_t k01 = 2;
inline constexpr std::size_t k00 = 3;
}  // namespace basis

/// Control knobs of the working substance: squeezing strength and field.
struct SubstanceParams {
  double mu = 0.0;
  double omega = 0.0;
};

/// Throws std::invalid_argument unless mu and omega are finite and >= 0.
void validate(const SubstanceParams& params);

using Levels = std::array<double, 4>;
using StateVector = std::array<double, 4>;

/// Energies E1 <= E2 <= E3 <= E4 and their (real) eigenvectors.
///
/// E1 = (mu - kappa)/2, E2 = 0, E3 = mu, E4 = (mu + kappa)/2 with
/// kappa = sqrt(mu^2 + 4 omega^2). The |00>/|11> pair is stored through the
/// mixing ratio t = mu / (2 omega + kappa) in [0, 1]:
///   Psi1 = (|00> - t|11>) / sqrt(1 + t^2)
///   Psi4 = (t|00> + |11>) / sqrt(1 + t^2)
/// which equals the textbook normalization with A_-/A_+ but stays exact as
/// mu -> 0. The |00> component of Psi1 and Psi4 is non-negative.
struct Spectrum {
  Levels energies{};
  std::array<StateVector, 4> eigenvectors{};
  double kappa = 0.0;
  double a_minus = 0.0;  // sqrt(mu^2 + (2 omega - kappa)^2)
  double a_plus = 0.0;   // sqrt(mu^2 + (2 omega + kappa)^2)
  double mixing = 0.0;   // t above
};

Spectrum spectrum(const SubstanceParams& params);

/// Adjacent gaps (E2-E1, E3-E2, E4-E3).
std::array<double, 3> energy_gaps(const Spectrum& spec);

}  // namespace otto
