// SPDX-License-Identifier: Apache-2.0
//
// Element count that minimises the total power of the RIS-assisted link for
// a target rate. The closed form treats beta_NIF as independent of N, which
// holds when both RIS hops are LoS.
#pragma once

#include <cstddef>

#include "rislink/execution.hpp"
#include "rislink/geometry_channel.hpp"
#include "rislink/link_budget.hpp"

namespace rislink {

struct SizingProblem {
  SpectralRate r_bar;
  NoisePower sigma2 = NoisePower::from_watts(1.0);
  double epsilon = 1.0;
  ChannelGain beta_nf = ChannelGain::from_linear(1.0);
  ChannelGain beta_nif = ChannelGain::from_linear(1.0);
  double p_e = 0.005;  // W per element

  /// Throws std::invalid_argument unless 0 < epsilon <= 1 and p_e > 0.
  void validate() const;
};

inline constexpr std::size_t kDefaultSearchLimit = 100000;

/// Total power of the RIS scenario with the transmit power required to hit
/// r_bar using n elements. `model.p_e` must equal `prob.p_e`.
double sizing_total_power(const SizingProblem& prob, const PowerModel& model, std::size_t n);

/// Real relaxation of sizing_total_power, for n >= 0.
double sizing_total_power_relaxed(const SizingProblem& prob, const PowerModel& model, double n);

/// Stationary point of the relaxed total power,
///   cbrt(2 (2^R - 1) sigma^2 / (nu eps^2 beta_nif P_e)) - sqrt(beta_nf / beta_nif) / eps,
/// clamped below at 0 (a negative root means the panel never pays off).
double optimal_elements_real(const SizingProblem& prob, double nu);

/// Integer minimiser: compares 0, floor(N*) and ceil(N*); ties go to the
/// smaller count.
std::size_t optimal_elements_int(const SizingProblem& prob, const PowerModel& model);

/// Exhaustive argmin over N in [0, n_max] (lowest index wins ties). Throws
/// SearchBoundaryHit when the minimum sits on n_max. The parallel kernel and
/// the serial reference return the same index.
std::size_t brute_force_optimal(const SizingProblem& prob, const PowerModel& model,
                                std::size_t n_max = kDefaultSearchLimit,
                                Execution exec = Execution::kParallel);

}  // namespace rislink
