// SPDX-License-Identifier: Apache-2.0
//
// Builds the NBS / FBS / DBS / RIS geometry from a configuration, evaluates
// the three X-haul scenarios and runs the position, power and energy
// efficiency sweeps. Sweep rows are independent and computed by an OpenMP
// kernel; Execution::kSerial runs the reference loop instead.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rislink/execution.hpp"
#include "rislink/geometry_channel.hpp"
#include "rislink/link_budget.hpp"

namespace rislink {

/// Internal units: meters, Hz, watts, bit/s/Hz.
struct ScenarioConfig {
  NodePosition nbs{0.0, 0.0};
  NodePosition fbs{100.0, 0.0};
  NodePosition dbs{100.0, 100.0};  // only |DBS - FBS| enters the math
  double ris_height = 15.0;        // perpendicular offset from the NBS-FBS axis
  double carrier_hz = 3.0e9;
  double bandwidth_hz = 10.0e6;
  double noise_figure_db = 10.0;
  AntennaGains gains{};
  double epsilon = 1.0;
  double tx_power_w = 1.0;  // 30 dBm
  PowerModel power_model{};
  SpectralRate target_rate{4.0};
  double threshold_fraction = 0.5;
  FloorPolicy floor_policy = FloorPolicy::kReject;
  std::vector<double> power_sweep_carriers_hz{3.0e9, 28.0e9};

  /// Throws ConfigInvalid naming the first offending field.
  void validate() const;
  NoisePower noise() const;
};

struct ScenarioLinks {
  double d_df = 0.0;
  double d_nf = 0.0;
  double d_ni = 0.0;
  double d_if = 0.0;
  ChannelGain beta_df = ChannelGain::from_linear(1.0);   // LoS
  ChannelGain beta_nf = ChannelGain::from_linear(1.0);   // NLoS
  ChannelGain beta_ni = ChannelGain::from_linear(1.0);   // LoS
  ChannelGain beta_if = ChannelGain::from_linear(1.0);   // LoS
  ChannelGain beta_nif = ChannelGain::from_linear(1.0);  // beta_ni * beta_if
};

/// RIS location: `ris_x` meters along the NBS->FBS axis from the NBS, offset
/// by cfg.ris_height to the left of that axis.
NodePosition ris_position(const ScenarioConfig& cfg, double ris_x);

/// Distances and channel gains of every link at cfg.carrier_hz.
/// Propagates DistanceBelowModelFloor.
ScenarioLinks build_links(const ScenarioConfig& cfg, double ris_x);

struct XRange {
  double first = 0.0;
  double last = 200.0;
};

/// first, first + step, ... up to last (inclusive, with a 1e-9 step slack).
/// Points are first + i*step, never accumulated.
std::vector<double> linear_grid(double first, double last, double step);

/// Column-oriented numeric table, rows sorted by the first column.
struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::optional<std::size_t> column_index(const std::string& name) const;
  /// Throws std::out_of_range for an unknown column.
  std::vector<double> column(const std::string& name) const;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Rates (bit/s/Hz) at cfg.tx_power_w for every RIS position.
/// Columns: x, R_los, R_nlos, R_ris_N<n>...
SweepResult sweep_position(const ScenarioConfig& cfg, std::span<const std::size_t> n_list,
                           XRange range, double step, Execution exec = Execution::kParallel);

/// Transmit power (dBm) needed for cfg.target_rate, per carrier in
/// cfg.power_sweep_carriers_hz. Columns: x, then per carrier <c>:
/// P_los_<c>_dBm, P_nlos_<c>_dBm, P_ris_N<n>_<c>_dBm...
SweepResult sweep_power(const ScenarioConfig& cfg, std::span<const std::size_t> n_list,
                        XRange range, double step, Execution exec = Execution::kParallel);

/// Per target rate: optimal element count, transmit powers (W), total powers
/// (W) and energy efficiency (bit/J) of the three scenarios. Columns: R, N_opt,
/// P_los_W, P_nlos_W, P_ris_W, Ptot_los_W, Ptot_nlos_W, Ptot_ris_W, EE_los,
/// EE_nlos, EE_ris.
SweepResult sweep_ee(const ScenarioConfig& cfg, std::span<const double> rate_grid, double ris_x,
                     Execution exec = Execution::kParallel);

/// Indices where the series stops rising: v[i] > v[i-1] (or i == 0) and the
/// next value different from v[i] is lower (or absent). A plateau reports its
/// left edge once.
std::vector<std::size_t> local_maxima(std::span<const double> values);

/// Column label for a carrier, e.g. "3GHz", "28GHz", "3.5GHz".
std::string carrier_label(double carrier_hz);

}  // namespace rislink
