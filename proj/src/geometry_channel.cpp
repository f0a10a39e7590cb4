// SPDX-License-Identifier: Apache-2.0
#include "rislink/geometry_channel.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rislink/errors.hpp"

namespace rislink {

double distance(NodePosition a, NodePosition b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double freq_offset_db(double carrier_hz) {
  if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz)) {
    throw NonPositiveLinearValue("carrier frequency must be a positive finite value");
  }
  if (carrier_hz == kReferenceCarrierHz) return 0.0;
  return 20.0 * std::log10(carrier_hz / kReferenceCarrierHz);
}

ChannelGain ChannelGain::from_linear(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "channel gain must be finite and > 0, got " << beta;
    throw NonPositiveLinearValue(msg.str());
  }
  return ChannelGain(beta);
}

ChannelGain ChannelGain::from_db(double beta_db) { return from_linear(to_linear(beta_db)); }

double ChannelGain::db() const { return to_db(beta_); }

NoisePower NoisePower::from_watts(double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw NonPositiveLinearValue("noise power must be finite and > 0");
  }
  return NoisePower(sigma2);
}

NoisePower NoisePower::from_dbm(double sigma2_dbm) { return from_watts(dbm_to_watts(sigma2_dbm)); }

double NoisePower::dbm() const { return watts_to_dbm(sigma2_); }

double channel_gain_db(double d, const PathLossParams& params, const AntennaGains& gains,
                       FloorPolicy policy) {
  if (!(params.ref_distance > 0.0) || !(params.slope_db_per_decade > 0.0)) {
    throw std::invalid_argument("path-loss law needs ref_distance > 0 and slope > 0");
  }
  if (!(d > 0.0) || !std::isfinite(d)) {
    std::ostringstream msg;
    msg << "link distance " << d << " m is not a positive finite value";
    throw DistanceBelowModelFloor(msg.str());
  }
  if (d < kUmiMinDistance) {
    std::ostringstream msg;
    msg << "link distance " << d << " m is below the " << kUmiMinDistance
        << " m UMi model floor";
    if (policy == FloorPolicy::kReject) throw DistanceBelowModelFloor(msg.str());
    std::cerr << "warning: " << msg.str() << "; evaluating anyway\n";
  }
  return gains.gt_dbi + gains.gr_dbi - params.intercept_db -
         params.slope_db_per_decade * std::log10(d / params.ref_distance) - params.freq_offset_db;
}

ChannelGain channel_gain(double d, const PathLossParams& params, const AntennaGains& gains,
                         FloorPolicy policy) {
  return ChannelGain::from_db(channel_gain_db(d, params, gains, policy));
}

double to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double to_db(double linear) {
  if (!(linear > 0.0)) {
    std::ostringstream msg;
    msg << "cannot express " << linear << " in dB";
    throw NonPositiveLinearValue(msg.str());
  }
  return 10.0 * std::log10(linear);
}

double dbm_to_watts(double dbm) noexcept { return to_linear(dbm - 30.0); }

double watts_to_dbm(double watts) { return to_db(watts) + 30.0; }

NoisePower noise_power(double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) {
    throw NonPositiveLinearValue("bandwidth must be finite and > 0");
  }
  const double dbm = kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return NoisePower::from_dbm(dbm);
}

}  // namespace rislink
