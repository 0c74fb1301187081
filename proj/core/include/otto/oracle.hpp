#pragma once

// Brute-force verifiers that share no code path with the closed forms in
// spin_model, thermal and correlations: an explicit Pauli-product Hamiltonian,
// a cyclic Jacobi eigensolver, Gibbs states from the eigendecomposition or a
// scaling-and-squaring matrix exponential, the Wootters concurrence and
// discord by direct search over projective measurements.

#include <array>
#include <complex>
#include <cstddef>

#include "otto/spin_model.hpp"
#include "otto/thermal.hpp"

namespace otto::oracle {

/// Dense real 4x4 matrix in the {|11>, |10>, |01>, |00>} basis, row-major.
class DenseMatrix4 {
 public:
  DenseMatrix4() = default;

  static DenseMatrix4 identity();
  static DenseMatrix4 kron(const std::array<std::array<double, 2>, 2>& lhs,
                           const std::array<std::array<double, 2>, 2>& rhs);

  double& operator()(std::size_t i, std::size_t j) { return m_[4 * i + j]; }
  double operator()(std::size_t i, std::size_t j) const { return m_[4 * i + j]; }

  DenseMatrix4& operator+=(const DenseMatrix4& rhs);
  DenseMatrix4& operator*=(double s);
  friend DenseMatrix4 operator+(DenseMatrix4 lhs, const DenseMatrix4& rhs) { return lhs += rhs; }
  friend DenseMatrix4 operator*(double s, DenseMatrix4 m) { return m *= s; }
  friend DenseMatrix4 operator*(const DenseMatrix4& lhs, const DenseMatrix4& rhs);

  StateVector apply(const StateVector& v) const;
  DenseMatrix4 transposed() const;
  double trace() const;
  double max_abs() const;
  /// Largest |m_ij - m_ji|.
  double asymmetry() const;

 private:
  std::array<double, 16> m_{};
};

/// Single-spin operators in the local basis {|1>, |0>}, sigma_z |1> = +|1>.
using Matrix2 = std::array<std::array<double, 2>, 2>;
Matrix2 pauli_x();
Matrix2 pauli_z();
Matrix2 identity2();

/// Collective S_x and S_z of two spins.
DenseMatrix4 collective_sx();
DenseMatrix4 collective_sz();

/// mu Sx^2 + omega Sz built from Pauli products.
DenseMatrix4 build_hamiltonian(const SubstanceParams& params);

struct Eigensystem {
  std::array<double, 4> values{};        // ascending
  std::array<StateVector, 4> vectors{};  // vectors[k] pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-14. Throws std::invalid_argument for a non-symmetric input.
Eigensystem jacobi_eigensolve(const DenseMatrix4& m);

/// sum_n P_n |v_n><v_n| from jacobi_eigensolve of the explicit Hamiltonian.
DenseMatrix4 thermal_state_direct(const SubstanceParams& params, double temperature);

/// exp(-H/T) / Tr exp(-H/T) by Taylor series with scaling and squaring.
DenseMatrix4 gibbs_matrix_exponential(const SubstanceParams& params, double temperature);

DenseMatrix4 to_dense(const XState& x);
/// Reads the X-pattern entries back out of a dense matrix.
XState to_xstate(const DenseMatrix4& rho);

/// -Tr rho log2 rho via the Jacobi eigenvalues.
double von_neumann_entropy(const DenseMatrix4& rho);

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, l_i the square roots of
/// the eigenvalues of sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho).
double concurrence_wootters(const DenseMatrix4& rho);

/// Direction of a rank-1 projective measurement on qubit B:
/// |n> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct MeasurementAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

/// S(rho_B) - S(rho) + sum_k p_k S(rho_{A|k}) for the measurement
/// {|n><n|, 1 - |n><n|} on B. Entropies of the fixed parts are computed once.
class MeasuredDiscord {
 public:
  explicit MeasuredDiscord(const DenseMatrix4& rho);
  double operator()(MeasurementAngles angles) const;
  double unconditional_part() const { return s_b_ - s_ab_; }

 private:
  DenseMatrix4 rho_;
  double s_b_ = 0.0;
  double s_ab_ = 0.0;
};

inline constexpr int kDefaultCoarseGrid = 181;
inline constexpr int kDefaultRefineIterations = 40;

struct DiscordSearch {
  double value = 0.0;
  MeasurementAngles best;
  std::size_t evaluations = 0;
};

/// Minimizes MeasuredDiscord over a coarse_n x coarse_n (theta, phi) grid and
/// refines the best cells with alternating golden-section line searches.
/// Throws std::invalid_argument if coarse_n < 64 or refine_iters < 0.
DiscordSearch discord_search(const XState& x, int coarse_n = kDefaultCoarseGrid,
                             int refine_iters = kDefaultRefineIterations);

double discord_bruteforce(const XState& x, int coarse_n = kDefaultCoarseGrid,
                          int refine_iters = kDefaultRefineIterations);

}  // namespace otto::oracle
