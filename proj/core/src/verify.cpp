#include "otto/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "otto/oracle.hpp"
#include "otto/spin_model.hpp"
#include "otto/thermal.hpp"

namespace otto {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed(); });
}

namespace {

double residual(const oracle::DenseMatrix4& m, const StateVector& v, double lambda) {
  const StateVector mv = m.apply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += (mv[i] - lambda * v[i]) * (mv[i] - lambda * v[i]);
  return std::sqrt(s);
}

double max_entry_difference(const XState& x, const oracle::DenseMatrix4& rho) {
  const oracle::DenseMatrix4 dense = oracle::to_dense(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(dense(i, j) - rho(i, j)));
  return worst;
}

}  // namespace

VerifyReport run_verification(std::size_t ensemble, std::uint64_t seed, const VerifyHooks& hooks) {
  if (ensemble == 0) throw std::invalid_argument("verification ensemble must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> knob(0.0, 20.0);
  std::uniform_real_distribution<double> temp(0.05, 100.0);
  std::uniform_real_distribution<double> knob_small(0.0, 12.0);
  std::uniform_real_distribution<double> temp_small(0.2, 20.0);

  VerifyCheck energies{"spectrum energies vs Jacobi", 0.0, 1e-10, ensemble};
  VerifyCheck eigvec{"analytic eigenvector residual", 0.0, 1e-12, ensemble};
  VerifyCheck jacobi{"Jacobi eigenpair residual", 0.0, 1e-12, ensemble};
  VerifyCheck xstate{"thermal X-state vs direct sum", 0.0, 1e-10, ensemble};
  VerifyCheck gibbs{"thermal X-state vs matrix exponential", 0.0, 1e-8, ensemble};
  VerifyCheck discord{"analytic vs brute-force discord", 0.0, 2e-4, ensemble};
  VerifyCheck bound{"brute-force discord above min(D1, D2)", 0.0, 1e-9, ensemble};

  for (std::size_t k = 0; k < ensemble; ++k) {
    const SubstanceParams params{knob(rng), knob(rng)};
    const double t = temp(rng);

    const Spectrum spec = spectrum(params);
    const oracle::DenseMatrix4 h = oracle::build_hamiltonian(params);
    const oracle::Eigensystem eig = oracle::jacobi_eigensolve(h);
    for (std::size_t n = 0; n < 4; ++n) {
      energies.max_deviation =
          std::max(energies.max_deviation, std::abs(spec.energies[n] - eig.values[n]));
      eigvec.max_deviation =
          std::max(eigvec.max_deviation, residual(h, spec.eigenvectors[n], spec.energies[n]));
      jacobi.max_deviation =
          std::max(jacobi.max_deviation, residual(h, eig.vectors[n], eig.values[n]));
    }

    const XState x = thermal_xstate(params, t);
    xstate.max_deviation = std::max(
        xstate.max_deviation, max_entry_difference(x, oracle::thermal_state_direct(params, t)));
    gibbs.max_deviation = std::max(
        gibbs.max_deviation, max_entry_difference(x, oracle::gibbs_matrix_exponential(params, t)));
  }

  for (std::size_t k = 0; k < ensemble; ++k) {
    const SubstanceParams params{knob_small(rng), knob_small(rng)};
    const XState x = thermal_xstate(params, temp_small(rng));
    const CorrelationReport analytic = hooks.discord(x);
    const double brute = oracle::discord_bruteforce(x);
    discord.max_deviation = std::max(discord.max_deviation, std::abs(analytic.discord - brute));
    bound.max_deviation =
        std::max(bound.max_deviation, brute - std::min(analytic.d1, analytic.d2));
  }

  return {{energies, eigvec, jacobi, xstate, gibbs, discord, bound}};
}

}  // namespace otto
