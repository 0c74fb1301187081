#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "otto/oracle.hpp"
#include "otto/thermal.hpp"

using Catch::Matchers::WithinAbs;

namespace {

// Independent entropy reference: long double with compensated summation.
double entropy_reference(const std::vector<long double>& p) {
  long double sum = 0.0L, comp = 0.0L;
  for (long double x : p) {
    if (x <= 0.0L) continue;
    const long double term = -x * std::log2(x) - comp;
    const long double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return static_cast<double>(sum);
}

void require_valid(const otto::XState& x) {
  REQUIRE_THAT(x.a + 2.0 * x.b + x.d, WithinAbs(1.0, 1e-12));
  REQUIRE(x.a >= 0.0);
  REQUIRE(x.b >= 0.0);
  REQUIRE(x.d >= 0.0);
  REQUIRE(x.a * x.d >= x.w * x.w - 1e-12);
  REQUIRE(x.b * x.b >= x.z * x.z - 1e-12);
}

}  // namespace

TEST_CASE("populations in the infinite-temperature limit", "[thermal]") {
  for (const otto::SubstanceParams p : {otto::SubstanceParams{5.0, 10.0}, {0.0, 4.0}, {3.0, 0.0}}) {
    const auto pops = otto::populations(otto::spectrum(p), 1e12);
    for (double x : pops.p) CHECK_THAT(x, WithinAbs(0.25, 1e-9));
  }
}

TEST_CASE("populations of the mu=0, omega=4 spectrum at T=4", "[thermal]") {
  const auto pops = otto::populations(otto::Levels{-4.0, 0.0, 0.0, 4.0}, 4.0);
  // Z = e + 2 + 1/e
  CHECK_THAT(std::exp(pops.log_z), WithinAbs(5.0861612696304875570, 1e-12));
  CHECK_THAT(pops.p[0], WithinAbs(0.53444664538852302671, 1e-14));
  CHECK_THAT(pops.p[1], WithinAbs(0.19661193324148185254, 1e-14));
  CHECK_THAT(pops.p[2], WithinAbs(0.19661193324148185254, 1e-14));
  CHECK_THAT(pops.p[3], WithinAbs(0.072329488128513268211, 1e-14));
  CHECK(pops.shift == -4.0);
}

TEST_CASE("populations saturate in the ground state", "[thermal]") {
  const auto pops = otto::populations(otto::spectrum({5.0, 10.0}), 1e-3);
  CHECK_THAT(pops.p[0], WithinAbs(1.0, 1e-12));
  CHECK_THAT(pops.p[1], WithinAbs(0.0, 1e-12));
  CHECK_THAT(pops.p[2], WithinAbs(0.0, 1e-12));
  CHECK_THAT(pops.p[3], WithinAbs(0.0, 1e-12));
}

TEST_CASE("populations stay finite for large beta*E", "[thermal]") {
  const auto pops = otto::populations(otto::Levels{-1000.0, -999.999, 500.0, 1000.0}, 1e-3);
  double sum = 0.0;
  for (double x : pops.p) {
    REQUIRE(std::isfinite(x));
    sum += x;
  }
  CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
  CHECK(std::isfinite(pops.log_z));
  // log Z = 1000/T + log(1 + e^-1)
  CHECK_THAT(pops.log_z, WithinAbs(1e6 + std::log1p(std::exp(-1.0)), 1e-6));
}

TEST_CASE("non-positive or non-finite temperatures are rejected", "[thermal]") {
  const auto s = otto::spectrum({1.0, 1.0});
  CHECK_THROWS_AS(otto::populations(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(otto::populations(s, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(otto::populations(s, std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(otto::populations(s, std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(otto::thermal_xstate({1.0, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(otto::thermal_xstate({-1.0, 1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("thermal X-state examples", "[thermal]") {
  SECTION("maximally mixed") {
    const auto x = otto::thermal_xstate({5.0, 10.0}, 1e12);
    CHECK_THAT(x.a, WithinAbs(0.25, 1e-9));
    CHECK_THAT(x.b, WithinAbs(0.25, 1e-9));
    CHECK_THAT(x.d, WithinAbs(0.25, 1e-9));
    CHECK_THAT(x.w, WithinAbs(0.0, 1e-9));
    CHECK_THAT(x.z, WithinAbs(0.0, 1e-9));
  }
  SECTION("mu=4, omega=0, T=1") {
    const auto x = otto::thermal_xstate({4.0, 0.0}, 1.0);
    CHECK_THAT(x.a, WithinAbs(0.25, 1e-15));
    CHECK_THAT(x.b, WithinAbs(0.25, 1e-15));
    CHECK_THAT(x.d, WithinAbs(0.25, 1e-15));
    CHECK_THAT(x.w, WithinAbs(-0.24100689501895422099, 1e-14));
    CHECK_THAT(x.z, WithinAbs(-0.24100689501895422099, 1e-14));
    const auto direct = otto::oracle::to_xstate(otto::oracle::thermal_state_direct({4.0, 0.0}, 1.0));
    CHECK_THAT(direct.w, WithinAbs(x.w, 1e-12));
    CHECK_THAT(direct.z, WithinAbs(x.z, 1e-12));
  }
  SECTION("pure ground state at mu=5, omega=10") {
    const auto x = otto::thermal_xstate({5.0, 10.0}, 1e-3);
    CHECK_THAT(x.b, WithinAbs(0.0, 1e-12));
    CHECK_THAT(x.z, WithinAbs(0.0, 1e-12));
    CHECK_THAT(x.a, WithinAbs(0.014928749927334052962, 1e-12));
    CHECK_THAT(x.d, WithinAbs(0.98507125007266594704, 1e-12));
    CHECK_THAT(x.w, WithinAbs(-0.12126781251816648676, 1e-12));
    CHECK_THAT(x.a * x.d - x.w * x.w, WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("von Neumann entropy of populations", "[thermal]") {
  otto::Populations pure;
  pure.p = {1.0, 0.0, 0.0, 0.0};
  CHECK(otto::von_neumann_entropy(pure) == 0.0);

  otto::Populations mixed;
  mixed.p = {0.25, 0.25, 0.25, 0.25};
  CHECK_THAT(otto::von_neumann_entropy(mixed), WithinAbs(2.0, 1e-15));

  const auto pops = otto::populations(otto::Levels{-4.0, 0.0, 0.0, 4.0}, 4.0);
  const double s = otto::von_neumann_entropy(pops);
  CHECK_THAT(s, WithinAbs(1.6798830759663384346, 1e-13));
  CHECK_THAT(s, WithinAbs(entropy_reference({pops.p.begin(), pops.p.end()}), 1e-14));
}

TEST_CASE("reduced entropy", "[thermal]") {
  CHECK_THAT(otto::reduced_entropy(otto::XState{0.25, 0.25, 0.25, 0.0, 0.0}), WithinAbs(1.0, 1e-15));
  CHECK_THAT(otto::reduced_entropy(otto::XState{0.0, 0.5, 0.0, 0.0, -0.5}), WithinAbs(1.0, 1e-15));
  const auto ground = otto::thermal_xstate({5.0, 10.0}, 1e-3);
  CHECK_THAT(otto::reduced_entropy(ground), WithinAbs(0.11193031881006424661, 1e-11));
}

TEST_CASE("binary entropy edge cases", "[thermal]") {
  CHECK(otto::binary_entropy(0.0) == 0.0);
  CHECK(otto::binary_entropy(1.0) == 0.0);
  CHECK(otto::binary_entropy(0.5) == 1.0);
  CHECK(otto::entropy_term(-1e-17) == 0.0);
}

TEST_CASE("thermal states agree with both oracles", "[thermal][property]") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> knob(0.0, 20.0);
  std::uniform_real_distribution<double> temp(0.05, 100.0);

  for (int trial = 0; trial < 1000; ++trial) {
    const otto::SubstanceParams p{knob(rng), knob(rng)};
    const double t = temp(rng);
    INFO("mu=" << p.mu << " omega=" << p.omega << " T=" << t);

    const auto x = otto::thermal_xstate(p, t);
    require_valid(x);

    const auto dense = otto::oracle::to_dense(x);
    const auto direct = otto::oracle::thermal_state_direct(p, t);
    const auto expm = otto::oracle::gibbs_matrix_exponential(p, t);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        REQUIRE_THAT(dense(i, j), WithinAbs(direct(i, j), 1e-10));
        REQUIRE_THAT(dense(i, j), WithinAbs(expm(i, j), 1e-8));
      }
    }

    const auto pops = otto::populations(otto::spectrum(p), t);
    REQUIRE_THAT(pops.p[0] + pops.p[1] + pops.p[2] + pops.p[3], WithinAbs(1.0, 1e-12));
    for (std::size_t n = 0; n < 4; ++n) {
      // exp(-dE/T) can underflow to 0 at T=0.05 with dE ~ 50.
      REQUIRE(pops.p[n] >= 0.0);
      REQUIRE(pops.p[n] <= 1.0);
      if (n > 0) REQUIRE(pops.p[n] <= pops.p[n - 1]);
    }

    auto ev = otto::xstate_eigenvalues(x);
    auto pp = pops.p;
    std::sort(ev.begin(), ev.end());
    std::sort(pp.begin(), pp.end());
    for (std::size_t n = 0; n < 4; ++n) REQUIRE_THAT(ev[n], WithinAbs(pp[n], 1e-10));

    for (double c : {1e3, -1e3}) {
      otto::Levels shifted = otto::spectrum(p).energies;
      for (double& e : shifted) e += c;
      const auto moved = otto::populations(shifted, t);
      for (std::size_t n = 0; n < 4; ++n) REQUIRE_THAT(moved.p[n], WithinAbs(pops.p[n], 1e-12));
    }
  }
}

TEST_CASE("entropy grows with temperature", "[thermal][property]") {
  for (const otto::SubstanceParams p :
       {otto::SubstanceParams{4.0, 4.0}, {0.0, 1.0}, {10.0, 11.0}, {1.0, 0.0}, {0.3, 7.0}}) {
    double previous = -1.0;
    for (double t = 0.01; t < 500.0; t *= 1.1) {
      const double s = otto::von_neumann_entropy(otto::populations(otto::spectrum(p), t));
      REQUIRE(s >= previous - 1e-12);
      REQUIRE(s >= 0.0);
      REQUIRE(s <= 2.0 + 1e-12);
      previous = s;
    }
  }
}
