// SPDX-License-Identifier: Apache-2.0
#include "rislink/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

void require_nonnegative_power(double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("transmit power must be finite and >= 0");
  }
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("reflection amplitude epsilon must lie in (0, 1]");
  }
}

// log2(1 + snr) and 2^R - 1 via log1p/expm1 so tiny rates keep full relative
// precision through the rate <-> power round trip.
double log2_1p(double snr) { return std::log1p(snr) / std::numbers::ln2; }
double exp2_m1(double rate) { return std::expm1(rate * std::numbers::ln2); }

}  // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::kDbsFbsLos:
      return "DBS-FBS LoS";
    case ScenarioKind::kNbsFbsNlos:
      return "NBS-FBS NLoS";
    case ScenarioKind::kNbsRisFbs:
      return "NBS-RIS-FBS";
  }
  return "unknown";
}

SpectralRate::SpectralRate(double bits_per_hz) : bits_per_hz_(bits_per_hz) {
  if (!(bits_per_hz >= 0.0) || !std::isfinite(bits_per_hz)) {
    throw std::invalid_argument("spectral rate must be finite and >= 0");
  }
}

void PowerModel::validate() const {
  if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("nu must lie in (0, 1]");
  if (!(p_d >= 0.0) || !(p_n >= 0.0) || !(p_f >= 0.0) || !(p_e >= 0.0)) {
    throw std::invalid_argument("dissipated powers must be >= 0");
  }
}

SpectralRate shannon_rate(double p, ChannelGain beta, NoisePower sigma2) {
  require_nonnegative_power(p);
  return SpectralRate(log2_1p(p * beta.linear() / sigma2.watts()));
}

SpectralRate ris_rate(double p, ChannelGain beta_nf, ChannelGain beta_nif, double epsilon,
                      std::size_t n_elements, NoisePower sigma2) {
  if (n_elements == 0) return shannon_rate(p, beta_nf, sigma2);
  require_nonnegative_power(p);
  require_epsilon(epsilon);
  const double amplitude =
      beta_nf.amplitude() + epsilon * static_cast<double>(n_elements) * beta_nif.amplitude();
  return SpectralRate(log2_1p(p * (amplitude * amplitude) / sigma2.watts()));
}

double required_power_direct(SpectralRate r_bar, ChannelGain beta, NoisePower sigma2) {
  return exp2_m1(r_bar.value()) * sigma2.watts() / beta.linear();
}

double required_power_ris(SpectralRate r_bar, ChannelGain beta_nf, ChannelGain beta_nif,
                          double epsilon, std::size_t n_elements, NoisePower sigma2) {
  if (n_elements == 0) return required_power_direct(r_bar, beta_nf, sigma2);
  return required_power_ris_relaxed(r_bar, beta_nf, beta_nif, epsilon,
                                    static_cast<double>(n_elements), sigma2);
}

double required_power_ris_relaxed(SpectralRate r_bar, ChannelGain beta_nf, ChannelGain beta_nif,
                                  double epsilon, double n_elements, NoisePower sigma2) {
  require_epsilon(epsilon);
  if (!(n_elements >= 0.0)) throw std::invalid_argument("element count must be >= 0");
  const double amplitude = beta_nf.amplitude() + epsilon * n_elements * beta_nif.amplitude();
  return exp2_m1(r_bar.value()) * sigma2.watts() / (amplitude * amplitude);
}

double total_power(ScenarioKind scenario, double p_tx, const PowerModel& model,
                   std::size_t n_elements) {
  require_nonnegative_power(p_tx);
  model.validate();
  const double radiated = p_tx / model.nu;
  switch (scenario) {
    case ScenarioKind::kDbsFbsLos:
      return radiated + model.p_d + model.p_f;
    case ScenarioKind::kNbsFbsNlos:
      return radiated + model.p_n + model.p_f;
    case ScenarioKind::kNbsRisFbs:
      return radiated + model.p_n + model.p_f + static_cast<double>(n_elements) * model.p_e;
  }
  throw std::invalid_argument("unknown scenario");
}

double energy_efficiency(double bandwidth_hz, SpectralRate rate, double p_total) {
  if (!(p_total > 0.0)) throw NonPositiveTotalPower("total power must be > 0 to compute EE");
  return bandwidth_hz * rate.value() / p_total;
}

}  // namespace rislink
