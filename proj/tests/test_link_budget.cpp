// SPDX-License-Identifier: Apache-2.0
#include <limits>
#include <random>

#include "doctest.h"
#include "rislink/errors.hpp"
#include "rislink/link_budget.hpp"
#include "rislink/ris_model.hpp"
#include "support/oracles.hpp"

using namespace rislink;

namespace {

const NoisePower kSigma2 = NoisePower::from_dbm(-94.0);
const ChannelGain kLos100 = ChannelGain::from_db(-71.5);
const ChannelGain kNlos100 = ChannelGain::from_db(-98.5);

}  // namespace

TEST_CASE("shannon rate") {
  CHECK(shannon_rate(0.0, kLos100, kSigma2).value() == 0.0);
  const auto beta = ChannelGain::from_linear(2.0);
  CHECK(shannon_rate(0.5 * kSigma2.watts(), beta, kSigma2).value() == doctest::Approx(1.0));
  // 30 dBm over LoS at 100 m: log2(1 + 10^((30 - 71.5 + 94) / 10)), computed offline.
  CHECK(shannon_rate(1.0, kLos100, kSigma2).value() ==
        doctest::Approx(17.440130611006254).epsilon(1e-12));
  CHECK_THROWS_AS(shannon_rate(-1.0, kLos100, kSigma2), std::invalid_argument);
}

TEST_CASE("RIS rate") {
  const auto beta_nif = ChannelGain::from_db(-125.0);
  SUBCASE("empty panel is exactly the direct NLoS rate") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> db(-140.0, -40.0);
    std::uniform_real_distribution<double> pw(0.0, 5.0);
    for (int i = 0; i < 500; ++i) {
      const auto b = ChannelGain::from_db(db(rng));
      const double p = pw(rng);
      CHECK(ris_rate(p, b, beta_nif, 0.7, 0, kSigma2).value() ==
            shannon_rate(p, b, kSigma2).value());
    }
  }
  SUBCASE("vanishing direct path shows the N^2 law") {
    const auto tiny = ChannelGain::from_linear(1e-300);
    const double p = 0.2;
    for (std::size_t n : {1u, 10u, 1000u}) {
      const double expected =
          std::log2(1.0 + p * double(n) * double(n) * beta_nif.linear() / kSigma2.watts());
      CHECK(ris_rate(p, tiny, beta_nif, 1.0, n, kSigma2).value() ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("N=500 at the NBS-side optimum beats the pre-failure LoS link") {
    // RIS at x=0, h=15: d_NI = 15 m, d_IF = hypot(100, 15).
    const auto los = PathLossParams::umi_los();
    const auto b_ni = channel_gain(15.0, los, AntennaGains{});
    const auto b_if = channel_gain(std::hypot(100.0, 15.0), los, AntennaGains{});
    const auto b_nif = cascaded_gain(b_ni, b_if);
    CHECK(ris_rate(1.0, kNlos100, b_nif, 1.0, 500, kSigma2) > shannon_rate(1.0, kLos100, kSigma2));
  }
}

TEST_CASE("required power") {
  CHECK(required_power_direct(SpectralRate(0.0), kLos100, kSigma2) == 0.0);
  CHECK(required_power_direct(SpectralRate(1.0), kLos100, kSigma2) ==
        doctest::Approx(kSigma2.watts() / kLos100.linear()).epsilon(1e-14));
  // 15 * 10^-9.4 / 10^-7.15 mW, computed offline.
  CHECK(watts_to_dbm(required_power_direct(SpectralRate(4.0), kLos100, kSigma2)) ==
        doctest::Approx(-10.739087409443187).epsilon(1e-12));

  const auto beta_nif = ChannelGain::from_db(-125.0);
  const SpectralRate r(6.0);
  CHECK(required_power_ris(r, kNlos100, beta_nif, 1.0, 0, kSigma2) ==
        required_power_direct(r, kNlos100, kSigma2));

  const auto negligible = ChannelGain::from_linear(1e-300);
  const double p1 = required_power_ris(r, negligible, beta_nif, 1.0, 400, kSigma2);
  const double p2 = required_power_ris(r, negligible, beta_nif, 1.0, 800, kSigma2);
  CHECK(p1 / p2 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("rate/power duality over random draws") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> rate(0.01, 30.0);
  std::uniform_real_distribution<double> db(-160.0, -40.0);
  std::uniform_real_distribution<double> noise_dbm(-120.0, -80.0);
  std::uniform_real_distribution<double> eps(0.05, 1.0);
  std::uniform_int_distribution<std::size_t> elements(0, 5000);
  for (int i = 0; i < 1000; ++i) {
    const SpectralRate r(rate(rng));
    const auto beta = ChannelGain::from_db(db(rng));
    const auto beta_nif = ChannelGain::from_db(db(rng) - 60.0);
    const auto sigma2 = NoisePower::from_dbm(noise_dbm(rng));
    const double e = eps(rng);
    const std::size_t n = elements(rng);
    const double back = shannon_rate(required_power_direct(r, beta, sigma2), beta, sigma2).value();
    CHECK(std::abs(back - r.value()) <= 1e-9 * r.value());
    const double p = required_power_ris(r, beta, beta_nif, e, n, sigma2);
    const double back_ris = ris_rate(p, beta, beta_nif, e, n, sigma2).value();
    CHECK(std::abs(back_ris - r.value()) <= 1e-9 * r.value());
  }
}

TEST_CASE("RIS rate monotonicity and lower bound") {
  const auto beta_nif = ChannelGain::from_db(-130.0);
  double previous = -1.0;
  const double direct = shannon_rate(1.0, kNlos100, kSigma2).value();
  for (std::size_t n = 0; n <= 2000; n += 50) {
    const double r = ris_rate(1.0, kNlos100, beta_nif, 0.9, n, kSigma2).value();
    CHECK(r > previous);
    if (n == 0) {
      CHECK(r == direct);
    } else {
      CHECK(r > direct);
    }
    previous = r;
  }
  previous = -1.0;
  for (double p = 0.0; p <= 4.0; p += 0.25) {
    const double r = ris_rate(p, kNlos100, beta_nif, 0.9, 300, kSigma2).value();
    CHECK(r > previous);
    previous = r;
  }
}

TEST_CASE("total power") {
  const PowerModel table_one;
  CHECK(total_power(ScenarioKind::kNbsRisFbs, 0.0, table_one, 0) == doctest::Approx(0.2));
  CHECK(total_power(ScenarioKind::kNbsRisFbs, 0.1, table_one, 100) == doctest::Approx(0.9));
  CHECK(total_power(ScenarioKind::kDbsFbsLos, 0.0, table_one) == doctest::Approx(0.2));
  CHECK(total_power(ScenarioKind::kNbsFbsNlos, 0.05, table_one) == doctest::Approx(0.3));

  PowerModel distinct{0.25, 0.3, 0.2, 0.1, 0.001};
  CHECK(total_power(ScenarioKind::kDbsFbsLos, 1.0, distinct) == doctest::Approx(4.0 + 0.3 + 0.1));
  CHECK(total_power(ScenarioKind::kNbsFbsNlos, 1.0, distinct) == doctest::Approx(4.0 + 0.2 + 0.1));
  // element count is ignored outside the RIS scenario
  CHECK(total_power(ScenarioKind::kNbsFbsNlos, 1.0, distinct, 999) ==
        total_power(ScenarioKind::kNbsFbsNlos, 1.0, distinct));

  // affine and strictly increasing in N
  const double step = total_power(ScenarioKind::kNbsRisFbs, 0.3, table_one, 1) -
                      total_power(ScenarioKind::kNbsRisFbs, 0.3, table_one, 0);
  CHECK(step == doctest::Approx(0.005));
  for (std::size_t n = 1; n < 500; ++n) {
    const double a = total_power(ScenarioKind::kNbsRisFbs, 0.3, table_one, n);
    const double b = total_power(ScenarioKind::kNbsRisFbs, 0.3, table_one, n + 1);
    CHECK(b > a);
    CHECK(b - a == doctest::Approx(step).epsilon(1e-9));
  }

  CHECK_THROWS_AS(total_power(ScenarioKind::kDbsFbsLos, 0.0, PowerModel{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(total_power(ScenarioKind::kDbsFbsLos, -0.1, table_one), std::invalid_argument);
}

TEST_CASE("total RIS power with the required transmit power is convex in N") {
  const PowerModel model;
  const auto beta_nif = ChannelGain::from_db(-125.0);
  const SpectralRate r(12.0);
  auto ptot = [&](double n) {
    const auto count = static_cast<std::size_t>(n);
    return total_power(ScenarioKind::kNbsRisFbs,
                       required_power_ris(r, kNlos100, beta_nif, 1.0, count, kSigma2), model,
                       count);
  };
  for (double n = 1.0; n < 3000.0; n += 1.0) CHECK(oracle::second_difference(ptot, n) >= -1e-12);
}

TEST_CASE("energy efficiency") {
  CHECK(energy_efficiency(10e6, SpectralRate(0.0), 1.0) == 0.0);
  CHECK(energy_efficiency(10e6, SpectralRate(4.0), 1.0) == doctest::Approx(4e7));
  CHECK_THROWS_AS(energy_efficiency(10e6, SpectralRate(4.0), 0.0), NonPositiveTotalPower);
  CHECK_THROWS_AS(energy_efficiency(10e6, SpectralRate(4.0), -2.0), NonPositiveTotalPower);
}

TEST_CASE("spectral rate and power model invariants") {
  CHECK_THROWS_AS(SpectralRate{-0.1}, std::invalid_argument);
  CHECK_THROWS_AS(SpectralRate{std::numeric_limits<double>::infinity()}, std::invalid_argument);
  CHECK_NOTHROW(PowerModel{}.validate());
  CHECK_THROWS_AS((PowerModel{1.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PowerModel{0.5, -0.1}.validate()), std::invalid_argument);
  CHECK(to_string(ScenarioKind::kNbsRisFbs) == "NBS-RIS-FBS");
}
