// SPDX-License-Identifier: Apache-2.0
//
// Achievable spectral efficiency, required transmit power for a target rate,
// total consumed power and energy efficiency for the three X-haul scenarios.
// Powers are in watts throughout.
#pragma once

#include <cstddef>
#include <string_view>

#include "rislink/geometry_channel.hpp"

namespace rislink {

enum class ScenarioKind {
  kDbsFbsLos,   // donor -> failed, pre-failure LoS link
  kNbsFbsNlos,  // neighbour -> failed, direct NLoS only
  kNbsRisFbs,   // neighbour -> failed, NLoS direct plus RIS reflection
};

std::string_view to_string(ScenarioKind kind) noexcept;

/// Rate in bit/s/Hz. Finite and >= 0.
class SpectralRate {
 public:
  constexpr SpectralRate() = default;
  /// Throws std::invalid_argument for negative or non-finite values.
  explicit SpectralRate(double bits_per_hz);
  constexpr double value() const noexcept { return bits_per_hz_; }
  friend constexpr auto operator<=>(SpectralRate, SpectralRate) = default;

 private:
  double bits_per_hz_ = 0.0;
};

struct PowerModel {
  double nu = 0.5;     // amplifier efficiency, (0, 1]
  double p_d = 0.1;    // W, donor hardware
  double p_n = 0.1;    // W, neighbour hardware
  double p_f = 0.1;    // W, failed-BS hardware
  double p_e = 0.005;  // W per RIS element

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
};

/// log2(1 + p * beta / sigma^2)
SpectralRate shannon_rate(double p, ChannelGain beta, NoisePower sigma2);

/// log2(1 + p * (sqrt(beta_nf) + epsilon * N * sqrt(beta_nif))^2 / sigma^2).
/// N = 0 is exactly shannon_rate over beta_nf.
SpectralRate ris_rate(double p, ChannelGain beta_nf, ChannelGain beta_nif, double epsilon,
                      std::size_t n_elements, NoisePower sigma2);

/// (2^R - 1) * sigma^2 / beta. Inverse of shannon_rate.
double required_power_direct(SpectralRate r_bar, ChannelGain beta, NoisePower sigma2);

/// (2^R - 1) * sigma^2 / (sqrt(beta_nf) + epsilon * N * sqrt(beta_nif))^2.
/// Inverse of ris_rate at fixed N.
double required_power_ris(SpectralRate r_bar, ChannelGain beta_nf, ChannelGain beta_nif,
                          double epsilon, std::size_t n_elements, NoisePower sigma2);

/// Same as required_power_ris with a real-valued element count (N >= 0).
/// Used by the sizing relaxation.
double required_power_ris_relaxed(SpectralRate r_bar, ChannelGain beta_nf, ChannelGain beta_nif,
                                  double epsilon, double n_elements, NoisePower sigma2);

/// Transmit power through the amplifier plus hardware dissipation:
///   DBS-FBS:     p/nu + P_D + P_F
///   NBS-FBS:     p/nu + P_N + P_F
///   NBS-RIS-FBS: p/nu + P_N + P_F + N * P_e
/// n_elements is ignored outside the RIS scenario.
double total_power(ScenarioKind scenario, double p_tx, const PowerModel& model,
                   std::size_t n_elements = 0);

/// Bits per joule, BW * R / P_tot. Throws NonPositiveTotalPower for P_tot <= 0.
double energy_efficiency(double bandwidth_hz, SpectralRate rate, double p_total);

}  // namespace rislink
