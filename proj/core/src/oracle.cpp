#include "otto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace otto::oracle {

namespace {

constexpr double kOffDiagonalTarget = 1e-14;
constexpr int kMaxSweeps = 100;

double neg_xlog2x(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

// Eigenvalues of the Hermitian 2x2 [[p, q], [conj q, r]].
std::pair<double, double> hermitian2_eigenvalues(double p, double r, double abs_q) {
  const double mean = 0.5 * (p + r);
  const double radius = std::hypot(0.5 * (p - r), abs_q);
  return {mean + radius, mean - radius};
}

}  // namespace

DenseMatrix4 DenseMatrix4::identity() {
  DenseMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix4 DenseMatrix4::kron(const Matrix2& lhs, const Matrix2& rhs) {
  DenseMatrix4 m;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) m(2 * a + c, 2 * b + d) = lhs[a][b] * rhs[c][d];
  return m;
}

DenseMatrix4& DenseMatrix4::operator+=(const DenseMatrix4& rhs) {
  for (std::size_t k = 0; k < 16; ++k) m_[k] += rhs.m_[k];
  return *this;
}

DenseMatrix4& DenseMatrix4::operator*=(double s) {
  for (double& v : m_) v *= s;
  return *this;
}

DenseMatrix4 operator*(const DenseMatrix4& lhs, const DenseMatrix4& rhs) {
  DenseMatrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const double l = lhs(i, k);
      for (std::size_t j = 0; j < 4; ++j) out(i, j) += l * rhs(k, j);
    }
  return out;
}

StateVector DenseMatrix4::apply(const StateVector& v) const {
  StateVector out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

DenseMatrix4 DenseMatrix4::transposed() const {
  DenseMatrix4 t;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix4::trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }

double DenseMatrix4::max_abs() const {
  double best = 0.0;
  for (double v : m_) best = std::max(best, std::abs(v));
  return best;
}

double DenseMatrix4::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

Matrix2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
Matrix2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }
Matrix2 identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

DenseMatrix4 collective_sx() {
  return 0.5 * (DenseMatrix4::kron(pauli_x(), identity2()) +
                DenseMatrix4::kron(identity2(), pauli_x()));
}

DenseMatrix4 collective_sz() {
  return 0.5 * (DenseMatrix4::kron(pauli_z(), identity2()) +
                DenseMatrix4::kron(identity2(), pauli_z()));
}

DenseMatrix4 build_hamiltonian(const SubstanceParams& params) {
  validate(params);
  const DenseMatrix4 sx = collective_sx();
  return params.mu * (sx * sx) + params.omega * collective_sz();
}

Eigensystem jacobi_eigensolve(const DenseMatrix4& m) {
  const double scale = std::max(1.0, m.max_abs());
  if (m.asymmetry() > 1e-14 * scale) {
    throw std::invalid_argument("jacobi_eigensolve: matrix is not symmetric");
  }

  DenseMatrix4 a;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  DenseMatrix4 v = DenseMatrix4::identity();

  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  Eigensystem out;
  while (off_norm() >= kOffDiagonalTarget) {
    if (++out.sweeps > kMaxSweeps) {
      throw std::runtime_error("jacobi_eigensolve: no convergence");
    }
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < 4; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t col = order[k];
    out.values[k] = a(col, col);
    StateVector vec{};
    std::size_t largest = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      vec[i] = v(i, col);
      if (std::abs(vec[i]) > std::abs(vec[largest])) largest = i;
    }
    if (vec[largest] < 0.0) {
      for (double& x : vec) x = -x;
    }
    out.vectors[k] = vec;
  }
  return out;
}

DenseMatrix4 thermal_state_direct(const SubstanceParams& params, double temperature) {
  validate_temperature(temperature);
  const Eigensystem eig = jacobi_eigensolve(build_hamiltonian(params));

  std::array<double, 4> weight{};
  double total = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    weight[n] = std::exp(-(eig.values[n] - eig.values[0]) / temperature);
    total += weight[n];
  }

  DenseMatrix4 rho;
  for (std::size_t n = 0; n < 4; ++n) {
    const double pn = weight[n] / total;
    const auto& vec = eig.vectors[n];
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rho(i, j) += pn * vec[i] * vec[j];
  }
  return rho;
}

DenseMatrix4 gibbs_matrix_exponential(const SubstanceParams& params, double temperature) {
  validate_temperature(temperature);
  const DenseMatrix4 h = build_hamiltonian(params);

  // Shift by a Gershgorin lower bound so that -(H - shift)/T is negative
  // semidefinite and the exponential cannot overflow.
  double shift = h(0, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) radius += std::abs(h(i, j));
    shift = std::min(shift, h(i, i) - radius);
  }

  DenseMatrix4 x = (-1.0 / temperature) * (h + (-shift) * DenseMatrix4::identity());
  double norm = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 4; ++j) row += std::abs(x(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  x *= std::ldexp(1.0, -squarings);

  DenseMatrix4 result = DenseMatrix4::identity();
  DenseMatrix4 term = DenseMatrix4::identity();
  for (int k = 1; k <= 24; ++k) {
    term = (1.0 / k) * (term * x);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;

  return (1.0 / result.trace()) * result;
}

DenseMatrix4 to_dense(const XState& x) {
  using namespace otto::basis;
  DenseMatrix4 rho;
  rho(k11, k11) = x.a;
  rho(k10, k10) = x.b;
  rho(k01, k01) = x.b;
  rho(k00, k00) = x.d;
  rho(k11, k00) = rho(k00, k11) = x.w;
  rho(k10, k01) = rho(k01, k10) = x.z;
  return rho;
}

XState to_xstate(const DenseMatrix4& rho) {
  using namespace otto::basis;
  XState x;
  x.a = rho(k11, k11);
  x.b = 0.5 * (rho(k10, k10) + rho(k01, k01));
  x.d = rho(k00, k00);
  x.w = rho(k11, k00);
  x.z = rho(k10, k01);
  return x;
}

double von_neumann_entropy(const DenseMatrix4& rho) {
  const Eigensystem eig = jacobi_eigensolve(rho);
  double s = 0.0;
  for (double l : eig.values) s += neg_xlog2x(l);
  return s;
}

double concurrence_wootters(const DenseMatrix4& rho) {
  const Eigensystem eig = jacobi_eigensolve(rho);
  DenseMatrix4 sqrt_rho;
  for (std::size_t n = 0; n < 4; ++n) {
    const double root = std::sqrt(std::max(0.0, eig.values[n]));
    const auto& v = eig.vectors[n];
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) sqrt_rho(i, j) += root * v[i] * v[j];
  }

  // sigma_y (x) sigma_y is real; rho is real so rho* = rho.
  DenseMatrix4 flip;
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  const DenseMatrix4 tilde = flip * rho * flip;
  DenseMatrix4 r = sqrt_rho * tilde * sqrt_rho;
  const DenseMatrix4 rt = r.transposed();
  r = 0.5 * (r + rt);

  const Eigensystem reig = jacobi_eigensolve(r);
  std::array<double, 4> l{};
  for (std::size_t k = 0; k < 4; ++k) l[k] = std::sqrt(std::max(0.0, reig.values[k]));
  // values are ascending
  return std::max(0.0, l[3] - l[2] - l[1] - l[0]);
}

MeasuredDiscord::MeasuredDiscord(const DenseMatrix4& rho) : rho_(rho) {
  // rho_B[b][b'] = sum_a rho[(a,b),(a,b')]
  const double b00 = rho(0, 0) + rho(2, 2);
  const double b11 = rho(1, 1) + rho(3, 3);
  const double b01 = rho(0, 1) + rho(2, 3);
  const auto [l1, l2] = hermitian2_eigenvalues(b00, b11, std::abs(b01));
  s_b_ = neg_xlog2x(l1) + neg_xlog2x(l2);
  s_ab_ = von_neumann_entropy(rho);
}

double MeasuredDiscord::operator()(MeasurementAngles angles) const {
  using cplx = std::complex<double>;
  const double c = std::cos(0.5 * angles.theta);
  const double s = std::sin(0.5 * angles.theta);
  const cplx phase = std::polar(1.0, angles.phi);

  // Local index 0 is |1>, index 1 is |0>.
  const std::array<std::array<cplx, 2>, 2> outcomes{{
      {phase * s, cplx(c, 0.0)},
      {-phase * c, cplx(s, 0.0)},
  }};

  double conditional = 0.0;
  for (const auto& u : outcomes) {
    std::array<std::array<cplx, 2>, 2> m{};
    for (std::size_t ia = 0; ia < 2; ++ia)
      for (std::size_t ja = 0; ja < 2; ++ja)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t bp = 0; bp < 2; ++bp)
            m[ia][ja] += std::conj(u[b]) * rho_(2 * ia + b, 2 * ja + bp) * u[bp];
    const double p = m[0][0].real() + m[1][1].real();
    if (p <= 0.0) continue;
    const auto [l1, l2] = hermitian2_eigenvalues(m[0][0].real(), m[1][1].real(), std::abs(m[0][1]));
    conditional += p * (neg_xlog2x(l1 / p) + neg_xlog2x(l2 / p));
  }
  return s_b_ - s_ab_ + conditional;
}

namespace {

// Golden-section minimization of f on [lo, hi]; returns (argmin, min) over
// every point evaluated, endpoints included.
template <typename F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, int iters,
                                         std::size_t& evaluations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double best_x = lo;
  double best_f = f(lo);
  const double f_hi = f(hi);
  evaluations += 2;
  if (f_hi < best_f) {
    best_x = hi;
    best_f = f_hi;
  }
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  evaluations += 2;
  for (int i = 0; i < iters; ++i) {
    if (f1 < best_f) { best_x = x1; best_f = f1; }
    if (f2 < best_f) { best_x = x2; best_f = f2; }
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    ++evaluations;
  }
  if (f1 < best_f) { best_x = x1; best_f = f1; }
  if (f2 < best_f) { best_x = x2; best_f = f2; }
  return {best_x, best_f};
}

constexpr std::size_t kRefinedCells = 4;

}  // namespace

DiscordSearch discord_search(const XState& x, int coarse_n, int refine_iters) {
  if (coarse_n < 64) throw std::invalid_argument("discord_bruteforce: coarse_n must be >= 64");
  if (refine_iters < 0) throw std::invalid_argument("discord_bruteforce: refine_iters must be >= 0");

  const MeasuredDiscord objective(to_dense(x));
  const double pi = std::numbers::pi;
  const auto n = static_cast<std::size_t>(coarse_n);
  const double d_theta = pi / static_cast<double>(n - 1);
  const double d_phi = 2.0 * pi / static_cast<double>(n);

  std::vector<double> grid(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      grid[i * n + j] = objective({d_theta * static_cast<double>(i), d_phi * static_cast<double>(j)});

  DiscordSearch out;
  out.evaluations = grid.size();

  std::vector<std::size_t> cells(grid.size());
  std::iota(cells.begin(), cells.end(), std::size_t{0});
  const std::size_t keep = std::min(kRefinedCells, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(keep), cells.end(),
                    [&grid](std::size_t l, std::size_t r) {
                      return grid[l] < grid[r] || (grid[l] == grid[r] && l < r);
                    });

  out.value = grid[cells[0]];
  out.best = {d_theta * static_cast<double>(cells[0] / n), d_phi * static_cast<double>(cells[0] % n)};

  for (std::size_t k = 0; k < keep; ++k) {
    MeasurementAngles at{d_theta * static_cast<double>(cells[k] / n),
                         d_phi * static_cast<double>(cells[k] % n)};
    double value = grid[cells[k]];
    // phi, theta, phi: the X-state objective is even in phi about 0 and pi/2,
    // so the coordinates decouple near the optimum.
    for (int pass = 0; pass < 3; ++pass) {
      if (pass % 2 == 0) {
        const auto [phi, f] = golden_section(
            [&](double p) { return objective({at.theta, p}); }, at.phi - d_phi, at.phi + d_phi,
            refine_iters, out.evaluations);
        if (f < value) { value = f; at.phi = phi; }
      } else {
        const double lo = std::max(0.0, at.theta - d_theta);
        const double hi = std::min(pi, at.theta + d_theta);
        const auto [theta, f] = golden_section(
            [&](double t) { return objective({t, at.phi}); }, lo, hi, refine_iters,
            out.evaluations);
        if (f < value) { value = f; at.theta = theta; }
      }
    }
    if (value < out.value) {
      out.value = value;
      out.best = at;
    }
  }

  if (out.best.phi < 0.0) out.best.phi += 2.0 * pi;
  if (out.best.phi >= 2.0 * pi) out.best.phi -= 2.0 * pi;
  return out;
}

double discord_bruteforce(const XState& x, int coarse_n, int refine_iters) {
  return discord_search(x, coarse_n, refine_iters).value;
}

}  // namespace otto::oracle
