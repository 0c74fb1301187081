#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "otto/correlations.hpp"
#include "otto/oracle.hpp"

using Catch::Matchers::WithinAbs;
using otto::XState;

namespace {

const XState kSinglet{0.0, 0.5, 0.0, 0.0, -0.5};
const XState kMixed{0.25, 0.25, 0.25, 0.0, 0.0};
constexpr double kGroundEntropy = 0.11193031881006424661;

}  // namespace

TEST_CASE("concurrence", "[correlations]") {
  CHECK_THAT(otto::concurrence(kSinglet), WithinAbs(1.0, 1e-15));
  CHECK(otto::concurrence(kMixed) == 0.0);

  const auto ground = otto::thermal_xstate({5.0, 10.0}, 1e-3);
  CHECK_THAT(otto::concurrence(ground), WithinAbs(0.24253562503633297352, 1e-12));
  CHECK_THAT(otto::concurrence(ground),
             WithinAbs(otto::oracle::concurrence_wootters(otto::oracle::to_dense(ground)), 1e-7));
}

TEST_CASE("entanglement of formation", "[correlations]") {
  CHECK_THAT(otto::eof(kSinglet), WithinAbs(1.0, 1e-15));
  CHECK(otto::eof_from_concurrence(0.0) == 0.0);
  CHECK(otto::eof(kMixed) == 0.0);

  const auto ground = otto::thermal_xstate({5.0, 10.0}, 1e-3);
  CHECK_THAT(otto::eof(ground), WithinAbs(kGroundEntropy, 1e-11));
  CHECK_THAT(otto::eof(ground), WithinAbs(otto::reduced_entropy(ground), 1e-9));
}

TEST_CASE("EoF is zero at C=0 and strictly increasing in C", "[correlations][property]") {
  CHECK(otto::eof_from_concurrence(0.0) == 0.0);
  double previous = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double c = i / 1000.0;
    const double e = otto::eof_from_concurrence(c);
    REQUIRE(e > previous);
    REQUIRE(e <= 1.0);
    previous = e;
  }
}

TEST_CASE("analytic discord examples", "[correlations]") {
  SECTION("maximally mixed") {
    const auto r = otto::discord_analytic(kMixed);
    CHECK(r.discord == 0.0);
    CHECK(r.concurrence == 0.0);
    CHECK(r.eof == 0.0);
  }
  SECTION("classically correlated diagonal state") {
    const XState x{0.4, 0.2, 0.2, 0.0, 0.0};
    CHECK_THAT(otto::discord_analytic(x).discord, WithinAbs(0.0, 1e-12));
    CHECK_THAT(otto::oracle::discord_bruteforce(x), WithinAbs(0.0, 1e-9));
  }
  SECTION("singlet") {
    const auto r = otto::discord_analytic(kSinglet);
    CHECK_THAT(r.discord, WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.gamma, WithinAbs(1.0, 1e-15));
    CHECK(r.delta_minus == 0.0);
  }
}

TEST_CASE("correlations of thermal points", "[correlations]") {
  SECTION("pure ground state: discord and EoF coincide") {
    const auto r = otto::correlations_at({5.0, 10.0}, 1e-3);
    CHECK_THAT(r.discord, WithinAbs(kGroundEntropy, 1e-9));
    CHECK_THAT(r.eof, WithinAbs(kGroundEntropy, 1e-9));
    const double brute = otto::oracle::discord_bruteforce(otto::thermal_xstate({5.0, 10.0}, 1e-3));
    CHECK_THAT(brute, WithinAbs(kGroundEntropy, 1e-6));
  }
  SECTION("infinite temperature") {
    for (const otto::SubstanceParams p : {otto::SubstanceParams{5.0, 10.0}, {0.0, 1.0}, {12.0, 3.0}}) {
      const auto r = otto::correlations_at(p, 1e12);
      CHECK_THAT(r.discord, WithinAbs(0.0, 1e-6));
      CHECK_THAT(r.eof, WithinAbs(0.0, 1e-6));
    }
  }
  SECTION("zero field: separable and classical in the Sx basis") {
    const auto x = otto::thermal_xstate({4.0, 0.0}, 1.0);
    const auto r = otto::discord_analytic(x);
    CHECK(r.concurrence == 0.0);
    CHECK(r.eof == 0.0);
    // Both concurrence branches are negative.
    CHECK(std::abs(x.z) - std::sqrt(x.a * x.d) < 0.0);
    CHECK(std::abs(x.w) - x.b < 0.0);
    CHECK_THAT(r.discord, WithinAbs(0.0, 1e-12));
    CHECK_THAT(otto::oracle::discord_bruteforce(x), WithinAbs(0.0, 1e-9));
  }
  SECTION("a separable but discordant thermal state") {
    const auto x = otto::thermal_xstate({1.0, 2.0}, 1.0);
    const auto r = otto::discord_analytic(x);
    CHECK(r.concurrence == 0.0);
    CHECK_THAT(r.discord, WithinAbs(0.021306466664922420, 1e-12));
    CHECK_THAT(otto::oracle::discord_bruteforce(x), WithinAbs(r.discord, 1e-9));
  }
}

TEST_CASE("report invariants", "[correlations]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> knob(0.0, 12.0);
  std::uniform_real_distribution<double> temp(0.05, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const auto r = otto::correlations_at({knob(rng), knob(rng)}, temp(rng));
    REQUIRE(r.discord == std::min(r.d1, r.d2));
    REQUIRE((r.eof == 0.0) == (r.concurrence == 0.0));
    REQUIRE(r.discord >= 0.0);
    REQUIRE(r.discord <= 1.0);
    REQUIRE(r.eof >= 0.0);
    REQUIRE(r.eof <= 1.0);
    REQUIRE(r.concurrence <= 1.0);
    REQUIRE_THAT(r.delta_plus + r.delta_minus, WithinAbs(1.0, 1e-15));
  }
}

TEST_CASE("analytic discord matches the measurement search", "[correlations][property]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> knob(0.0, 12.0);
  std::uniform_real_distribution<double> temp(0.2, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = otto::thermal_xstate({knob(rng), knob(rng)}, temp(rng));
    const auto r = otto::discord_analytic(x);
    const double brute = otto::oracle::discord_bruteforce(x);
    worst = std::max(worst, std::abs(r.discord - brute));
    REQUIRE_THAT(r.discord, WithinAbs(brute, 2e-4));
    REQUIRE(r.discord >= 0.0);
    REQUIRE(r.discord <= 1.0);
  }
  INFO("worst deviation " << worst);
  SUCCEED();
}

TEST_CASE("pure thermal states: discord equals EoF equals S(rho_A)", "[correlations][property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mu(0.0, 12.0);
  std::uniform_real_distribution<double> omega(1.0, 12.0);
  for (int i = 0; i < 500; ++i) {
    const auto x = otto::thermal_xstate({mu(rng), omega(rng)}, 1e-3);
    REQUIRE_THAT(x.a * x.d - x.w * x.w, WithinAbs(0.0, 1e-12));
    const auto r = otto::discord_analytic(x);
    const double s_a = otto::reduced_entropy(x);
    REQUIRE_THAT(r.discord, WithinAbs(r.eof, 1e-6));
    REQUIRE_THAT(r.discord, WithinAbs(s_a, 1e-6));
    REQUIRE_THAT(r.eof, WithinAbs(s_a, 1e-6));
  }
}

TEST_CASE("discord decays with temperature", "[correlations][property]") {
  double previous = 2.0;
  const double d1 = otto::correlations_at({4.0, 4.0}, 1.0).discord;
  for (double t : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    const double d = otto::correlations_at({4.0, 4.0}, t).discord;
    REQUIRE(d < previous);
    previous = d;
  }
  CHECK(previous < d1 / 10.0);
}
