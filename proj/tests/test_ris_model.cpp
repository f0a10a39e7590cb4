// SPDX-License-Identifier: Apache-2.0
#include <numbers>
#include <random>

#include "doctest.h"
#include "rislink/errors.hpp"
#include "rislink/ris_model.hpp"
#include "support/oracles.hpp"

using namespace rislink;

namespace {

constexpr double kPi = std::numbers::pi;

double coherent_sum(Complex h_nf, const ComplexChannel& h_ni, const ComplexChannel& h_if,
                    double eps) {
  double sum = std::abs(h_nf);
  for (std::size_t n = 0; n < h_ni.size(); ++n) sum += eps * std::abs(h_ni[n]) * std::abs(h_if[n]);
  return sum;
}

}  // namespace

TEST_CASE("optimal phases: worked examples") {
  const Complex h_nf = std::polar(1.0, 0.0);
  const ComplexChannel h_ni({std::polar(1.0, kPi / 4)});
  const ComplexChannel h_if({std::polar(1.0, kPi / 4)});
  const auto phases = optimal_phases(h_nf, h_ni, h_if);
  REQUIRE(phases.size() == 1);
  CHECK(phases[0] == doctest::Approx(3.0 * kPi / 2));  // -90 deg wrapped

  const ComplexChannel real_ni({0.5, 1.0, 2.0});
  const ComplexChannel real_if({1.5, 0.2, 3.0});
  for (double phi : optimal_phases(2.0, real_ni, real_if)) CHECK(phi == 0.0);

  CHECK_THROWS_AS(optimal_phases(1.0, ComplexChannel({1.0, 1.0}), ComplexChannel({1.0})),
                  LengthMismatch);
}

TEST_CASE("optimal phases align every reflected term with the direct path") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
    const Complex h_nf = oracle::random_channel(rng, 1)[0];
    const ComplexChannel h_ni(oracle::random_channel(rng, n));
    const ComplexChannel h_if(oracle::random_channel(rng, n));
    const auto phases = optimal_phases(h_nf, h_ni, h_if);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(phases[k] >= 0.0);
      CHECK(phases[k] < 2.0 * kPi);
      const Complex term = std::polar(1.0, phases[k]) * h_ni[k] * h_if[k];
      const double misalignment = std::abs(std::arg(term / h_nf));
      CHECK(misalignment < 1e-9);
    }
  }
}

TEST_CASE("combined gain") {
  const Complex h_nf = std::polar(0.3, 1.1);
  SUBCASE("empty panel is the direct path") {
    CHECK(combined_gain(h_nf, ComplexChannel{}, ComplexChannel{}, RisPanel(0, 1.0)) ==
          doctest::Approx(0.3));
  }
  SUBCASE("100 unit elements, optimal phases") {
    std::mt19937_64 rng(5);
    std::vector<double> ph(100);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    std::vector<Complex> ni, fi;
    for (int k = 0; k < 100; ++k) {
      ni.push_back(std::polar(1.0, u(rng)));
      fi.push_back(std::polar(1.0, u(rng)));
    }
    const ComplexChannel h_ni(ni), h_if(fi);
    const RisPanel panel(optimal_phases(h_nf, h_ni, h_if), 1.0);
    CHECK(combined_gain(h_nf, h_ni, h_if, panel) == doctest::Approx(100.3).epsilon(1e-12));
  }
  SUBCASE("anti-phase single element") {
    const ComplexChannel h_ni({std::polar(2.0, 0.4)});
    const ComplexChannel h_if({std::polar(1.5, -0.9)});
    auto phases = optimal_phases(h_nf, h_ni, h_if);
    phases[0] += kPi;
    const RisPanel panel(phases, 0.8);
    CHECK(combined_gain(h_nf, h_ni, h_if, panel) ==
          doctest::Approx(std::abs(0.8 * 2.0 * 1.5 - 0.3)).epsilon(1e-12));
  }
  SUBCASE("length mismatch") {
    const ComplexChannel two({1.0, 1.0});
    CHECK_THROWS_AS(combined_gain(h_nf, two, two, RisPanel(3, 1.0)), LengthMismatch);
    CHECK_THROWS_AS(combined_gain(h_nf, two, ComplexChannel({1.0}), RisPanel(2, 1.0)),
                    LengthMismatch);
  }
}

TEST_CASE("closed form equals coherent sum and beats the 16-level grid") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> eps_dist(0.1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 6);
    const double eps = eps_dist(rng);
    const Complex h_nf = oracle::random_channel(rng, 1)[0];
    const ComplexChannel h_ni(oracle::random_channel(rng, n));
    const ComplexChannel h_if(oracle::random_channel(rng, n));
    const RisPanel panel(optimal_phases(h_nf, h_ni, h_if), eps);
    const double closed = combined_gain(h_nf, h_ni, h_if, panel);
    CHECK(closed == doctest::Approx(coherent_sum(h_nf, h_ni, h_if, eps)).epsilon(1e-9));
    const auto c = oracle::products(h_ni.entries(), h_if.entries());
    CHECK(closed >= oracle::grid_max_plain(h_nf, c, eps) * (1.0 - 1e-12));
  }
}

TEST_CASE("appending an optimally phased element never lowers the gain") {
  std::mt19937_64 rng(42);
  const Complex h_nf = oracle::random_channel(rng, 1)[0];
  std::vector<Complex> ni, fi;
  double previous = std::abs(h_nf);
  for (int n = 1; n <= 64; ++n) {
    ni.push_back(oracle::random_channel(rng, 1)[0]);
    fi.push_back(oracle::random_channel(rng, 1)[0]);
    const ComplexChannel h_ni(ni), h_if(fi);
    const double g = combined_gain(h_nf, h_ni, h_if, RisPanel(optimal_phases(h_nf, h_ni, h_if), 0.7));
    CHECK(g >= previous);
    previous = g;
  }
}

TEST_CASE("cascaded gain") {
  const auto one = ChannelGain::from_linear(1.0);
  CHECK(cascaded_gain(one, one).linear() == 1.0);
  CHECK(cascaded_gain(ChannelGain::from_linear(1e-7), ChannelGain::from_linear(1e-7)).linear() ==
        doctest::Approx(1e-14).epsilon(1e-12));

  const auto los15 = channel_gain(15.0, PathLossParams::umi_los(), AntennaGains{});
  const double expected_db = 2.0 * (10.0 - 37.5 - 22.0 * std::log10(15.0));
  CHECK(cascaded_gain(los15, los15).db() == doctest::Approx(expected_db).epsilon(1e-12));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> db(-150.0, 0.0);
  for (int i = 0; i < 200; ++i) {
    const auto a = ChannelGain::from_db(db(rng));
    const auto b = ChannelGain::from_db(db(rng));
    CHECK(cascaded_gain(a, b) == cascaded_gain(b, a));
  }
}

TEST_CASE("mean cascaded amplitude collapses to the product form for equal elements") {
  const double a_ni = std::sqrt(to_linear(-53.4));
  const double a_if = std::sqrt(to_linear(-71.6));
  const ComplexChannel h_ni(std::vector<Complex>(10, std::polar(a_ni, 0.3)));
  const ComplexChannel h_if(std::vector<Complex>(10, std::polar(a_if, -1.2)));
  const auto beta_nif = cascaded_gain(ChannelGain::from_linear(a_ni * a_ni),
                                      ChannelGain::from_linear(a_if * a_if));
  CHECK(mean_cascaded_amplitude(h_ni, h_if) == doctest::Approx(beta_nif.amplitude()).epsilon(1e-12));
}

TEST_CASE("RisPanel invariants") {
  CHECK_THROWS_AS(RisPanel(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RisPanel(4, 1.5), std::invalid_argument);
  CHECK_NOTHROW(RisPanel(4, 1.0));
  const RisPanel p({-kPi / 2, 5.0 * kPi, 2.0 * kPi}, 0.5);
  CHECK(p.n_elements() == 3);
  CHECK(p.phases()[0] == doctest::Approx(1.5 * kPi));
  CHECK(p.phases()[1] == doctest::Approx(kPi));
  CHECK(p.phases()[2] == doctest::Approx(0.0));
  CHECK(std::abs(p.reflection(1)) == doctest::Approx(0.5));
  CHECK(wrap_phase(-1e-300) < 2.0 * kPi);
  CHECK_THROWS_AS(ComplexChannel::from_polar(std::vector<double>{-1.0}, std::vector<double>{0.0}),
                  std::invalid_argument);
}
