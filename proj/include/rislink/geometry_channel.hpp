// SPDX-License-Identifier: Apache-2.0
//
// Planar node geometry and the deterministic 3GPP UMi street-canyon channel
// gains used by every scenario. All arithmetic downstream of this header is in
// linear units; dB and dBm only appear at construction and at I/O.
#pragma once

#include <cmath>

namespace rislink {

struct NodePosition {
  double x = 0.0;  // m
  double y = 0.0;  // m
};

/// Euclidean distance in meters.
double distance(NodePosition a, NodePosition b) noexcept;

/// Below this distance the UMi LoS/NLoS laws are not defined.
inline constexpr double kUmiMinDistance = 10.0;  // m

/// Thermal noise spectral density at 290 K.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

/// Carrier at which the UMi intercepts apply without correction.
inline constexpr double kReferenceCarrierHz = 3.0e9;

/// Single-slope log-distance law:
///   gain[dB] = Gt + Gr - intercept - slope * log10(d / d0) - freq_offset
struct PathLossParams {
  double intercept_db = 0.0;
  double slope_db_per_decade = 0.0;
  double ref_distance = 1.0;  // m
  double freq_offset_db = 0.0;

  static PathLossParams umi_los(double freq_offset_db = 0.0) {
    return {37.5, 22.0, 1.0, freq_offset_db};
  }
  static PathLossParams umi_nlos(double freq_offset_db = 0.0) {
    return {35.1, 36.7, 1.0, freq_offset_db};
  }
};

/// Extra loss applied to both UMi presets away from 3 GHz:
/// 20*log10(fc / 3 GHz). Zero at the reference carrier.
double freq_offset_db(double carrier_hz);

struct AntennaGains {
  double gt_dbi = 5.0;
  double gr_dbi = 5.0;
};

/// What to do when a link is shorter than kUmiMinDistance.
enum class FloorPolicy {
  kReject,  // throw DistanceBelowModelFloor
  kWarn,    // log to stderr and evaluate the law anyway
};

/// Linear power gain of a link (beta). Always strictly positive.
class ChannelGain {
 public:
  /// Throws NonPositiveLinearValue unless beta is finite and > 0.
  static ChannelGain from_linear(double beta);
  static ChannelGain from_db(double beta_db);

  double linear() const noexcept { return beta_; }
  double amplitude() const noexcept { return std::sqrt(beta_); }
  double db() const;

  friend bool operator==(ChannelGain, ChannelGain) = default;

 private:
  explicit ChannelGain(double beta) : beta_(beta) {}
  double beta_;
};

/// Receiver noise variance sigma^2 in watts.
class NoisePower {
 public:
  static NoisePower from_watts(double sigma2);
  static NoisePower from_dbm(double sigma2_dbm);

  double watts() const noexcept { return sigma2_; }
  double dbm() const;

 private:
  explicit NoisePower(double sigma2) : sigma2_(sigma2) {}
  double sigma2_;
};

/// Link gain in dB at distance d. Distances in (0, 10 m) follow `policy`;
/// d <= 0 is always rejected.
double channel_gain_db(double d, const PathLossParams& params, const AntennaGains& gains,
                       FloorPolicy policy = FloorPolicy::kReject);

ChannelGain channel_gain(double d, const PathLossParams& params, const AntennaGains& gains,
                         FloorPolicy policy = FloorPolicy::kReject);

double to_linear(double db) noexcept;
/// Throws NonPositiveLinearValue for x <= 0.
double to_db(double linear);

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts);

/// kTB noise plus receiver noise figure. Bandwidth in Hz, must be > 0.
NoisePower noise_power(double bandwidth_hz, double noise_figure_db);

}  // namespace rislink
