#pragma once

#include <array>
#include <span>

#include "otto/spin_model.hpp"

namespace otto {

/// Throws std::invalid_argument unless 0 < temperature < inf.
void validate_temperature(double temperature);

struct ThermalPoint {
  SubstanceParams params;
  double temperature = 1.0;
};

/// Gibbs occupation probabilities, ordered like Spectrum::energies.
///
/// The partition function is kept in log form: Z = exp(log_z), evaluated as
/// exp(-shift/T) * sum_n exp(-(E_n - shift)/T) with shift = min E_n, so it
/// never overflows for large beta*E.
struct Populations {
  std::array<double, 4> p{};
  double log_z = 0.0;
  double shift = 0.0;
};

Populations populations(const Levels& energies, double temperature);
Populations populations(const Spectrum& spec, double temperature);

/// Real X-shaped two-qubit density matrix
///
///   | a 0 0 w |
///   | 0 b z 0 |
///   | 0 z b 0 |
///   | w 0 0 d |
///
/// in the {|11>, |10>, |01>, |00>} basis.
struct XState {
  double a = 0.25;
  double b = 0.25;
  double d = 0.25;
  double w = 0.0;
  double z = 0.0;
};

/// Assembles sum_n P_n |Psi_n><Psi_n| directly in X form.
XState xstate_from(const Spectrum& spec, const Populations& pops);
XState thermal_xstate(const SubstanceParams& params, double temperature);
inline XState thermal_xstate(const ThermalPoint& point) {
  return thermal_xstate(point.params, point.temperature);
}

/// Closed-form spectrum of an XState: {b+z, b-z, (a+d)/2 +- sqrt((a-d)^2/4 + w^2)}.
std::array<double, 4> xstate_eigenvalues(const XState& x);

/// -x log2 x with the 0 log 0 = 0 convention; negative round-off maps to 0.
double entropy_term(double x);
/// Shannon entropy in bits.
double shannon_entropy(std::span<const double> probabilities);
/// h[x] = -x log2 x - (1-x) log2(1-x).
double binary_entropy(double x);

/// S(rho) in bits. The thermal state is diagonal in the energy eigenbasis.
double von_neumann_entropy(const Populations& pops);
/// S(rho) from the closed-form X-state eigenvalues.
double von_neumann_entropy(const XState& x);
/// S(rho_A) = h[a + b]; equal to S(rho_B) for this family.
double reduced_entropy(const XState& x);

}  // namespace otto
