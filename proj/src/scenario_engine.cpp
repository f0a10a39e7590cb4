// SPDX-License-Identifier: Apache-2.0
#include "rislink/scenario_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rislink/errors.hpp"
#include "rislink/ris_model.hpp"
#include "rislink/ris_sizing.hpp"

namespace rislink {
namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigInvalid(field, what);
}

bool finite_position(NodePosition p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void check_finite_rows(const SweepResult& result) {
  for (const auto& row : result.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        std::ostringstream msg;
        msg << "sweep produced a non-finite value in column " << result.columns[c] << " at "
            << result.columns[0] << "=" << row[0];
        throw ModelDomainError(msg.str());
      }
    }
  }
}

void check_grid_args(std::span<const std::size_t> n_list, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigInvalid("sweep.step_m", "must be > 0");
  if (n_list.empty()) throw ConfigInvalid("ris.elements", "needs at least one element count");
}

std::string ris_column(const char* prefix, std::size_t n, const std::string& suffix) {
  return std::string(prefix) + "_ris_N" + std::to_string(n) + suffix;
}

ScenarioConfig at_carrier(const ScenarioConfig& cfg, double carrier_hz) {
  ScenarioConfig copy = cfg;
  copy.carrier_hz = carrier_hz;
  return copy;
}

}  // namespace

void ScenarioConfig::validate() const {
  require(finite_position(nbs), "geometry.nbs", "coordinates must be finite");
  require(finite_position(fbs), "geometry.fbs", "coordinates must be finite");
  require(finite_position(dbs), "geometry.dbs", "coordinates must be finite");
  require(distance(nbs, fbs) > 0.0, "geometry.fbs", "must differ from geometry.nbs");
  require(distance(dbs, fbs) > 0.0, "geometry.dbs", "must differ from geometry.fbs");
  require(std::isfinite(ris_height), "geometry.ris_height_m", "must be finite");
  require(carrier_hz > 0.0 && std::isfinite(carrier_hz), "radio.carrier_ghz", "must be > 0");
  require(bandwidth_hz > 0.0 && std::isfinite(bandwidth_hz), "radio.bandwidth_mhz",
          "must be > 0");
  require(std::isfinite(noise_figure_db), "radio.noise_figure_db", "must be finite");
  require(std::isfinite(gains.gt_dbi), "radio.antenna_gain_tx_dbi", "must be finite");
  require(std::isfinite(gains.gr_dbi), "radio.antenna_gain_rx_dbi", "must be finite");
  require(tx_power_w >= 0.0 && std::isfinite(tx_power_w), "radio.tx_power_dbm",
          "must be finite");
  require(epsilon > 0.0 && epsilon <= 1.0, "ris.epsilon", "must lie in (0, 1]");
  require(power_model.nu > 0.0 && power_model.nu <= 1.0, "power_model.nu", "must lie in (0, 1]");
  require(power_model.p_d >= 0.0, "power_model.p_d_mw", "must be >= 0");
  require(power_model.p_n >= 0.0, "power_model.p_n_mw", "must be >= 0");
  require(power_model.p_f >= 0.0, "power_model.p_f_mw", "must be >= 0");
  require(power_model.p_e > 0.0, "power_model.p_e_mw", "must be > 0");
  require(threshold_fraction > 0.0 && threshold_fraction <= 1.0, "target.threshold_fraction",
          "must lie in (0, 1]");
  require(!power_sweep_carriers_hz.empty(), "sweep.carriers_ghz", "needs at least one carrier");
  for (double c : power_sweep_carriers_hz) {
    require(c > 0.0 && std::isfinite(c), "sweep.carriers_ghz", "carriers must be > 0");
  }
}

NoisePower ScenarioConfig::noise() const { return noise_power(bandwidth_hz, noise_figure_db); }

NodePosition ris_position(const ScenarioConfig& cfg, double ris_x) {
  const double axis = distance(cfg.nbs, cfg.fbs);
  const double ux = (cfg.fbs.x - cfg.nbs.x) / axis;
  const double uy = (cfg.fbs.y - cfg.nbs.y) / axis;
  // Left normal of the NBS->FBS direction.
  return {cfg.nbs.x + ris_x * ux - cfg.ris_height * uy,
          cfg.nbs.y + ris_x * uy + cfg.ris_height * ux};
}

ScenarioLinks build_links(const ScenarioConfig& cfg, double ris_x) {
  const double offset = freq_offset_db(cfg.carrier_hz);
  const auto los = PathLossParams::umi_los(offset);
  const auto nlos = PathLossParams::umi_nlos(offset);
  const NodePosition ris = ris_position(cfg, ris_x);

  ScenarioLinks links;
  links.d_df = distance(cfg.dbs, cfg.fbs);
  links.d_nf = distance(cfg.nbs, cfg.fbs);
  links.d_ni = distance(cfg.nbs, ris);
  links.d_if = distance(ris, cfg.fbs);
  links.beta_df = channel_gain(links.d_df, los, cfg.gains, cfg.floor_policy);
  links.beta_nf = channel_gain(links.d_nf, nlos, cfg.gains, cfg.floor_policy);
  links.beta_ni = channel_gain(links.d_ni, los, cfg.gains, cfg.floor_policy);
  links.beta_if = channel_gain(links.d_if, los, cfg.gains, cfg.floor_policy);
  links.beta_nif = cascaded_gain(links.beta_ni, links.beta_if);
  return links;
}

std::vector<double> linear_grid(double first, double last, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigInvalid("sweep.step_m", "must be > 0");
  if (!(last >= first) || !std::isfinite(first) || !std::isfinite(last)) {
    throw ConfigInvalid("sweep.x_max_m", "must be finite and >= sweep.x_min_m");
  }
  const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = first + static_cast<double>(i) * step;
  return grid;
}

std::optional<std::size_t> SweepResult::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> SweepResult::column(const std::string& name) const {
  const auto idx = column_index(name);
  if (!idx) throw std::out_of_range("no column named " + name);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(row.at(*idx));
  return values;
}

SweepResult sweep_position(const ScenarioConfig& cfg, std::span<const std::size_t> n_list,
                           XRange range, double step, Execution exec) {
  cfg.validate();
  check_grid_args(n_list, step);
  const auto xs = linear_grid(range.first, range.last, step);
  const NoisePower sigma2 = cfg.noise();

  SweepResult result;
  result.columns = {"x", "R_los", "R_nlos"};
  for (auto n : n_list) result.columns.push_back(ris_column("R", n, ""));
  result.rows.assign(xs.size(), std::vector<double>(result.columns.size()));

  detail::for_each_index(xs.size(), exec, [&](std::size_t i) {
    const ScenarioLinks links = build_links(cfg, xs[i]);
    auto& row = result.rows[i];
    row[0] = xs[i];
    row[1] = shannon_rate(cfg.tx_power_w, links.beta_df, sigma2).value();
    row[2] = shannon_rate(cfg.tx_power_w, links.beta_nf, sigma2).value();
    for (std::size_t k = 0; k < n_list.size(); ++k) {
      row[3 + k] = ris_rate(cfg.tx_power_w, links.beta_nf, links.beta_nif, cfg.epsilon,
                            n_list[k], sigma2)
                       .value();
    }
  });
  check_finite_rows(result);
  return result;
}

SweepResult sweep_power(const ScenarioConfig& cfg, std::span<const std::size_t> n_list,
                        XRange range, double step, Execution exec) {
  cfg.validate();
  check_grid_args(n_list, step);
  if (!(cfg.target_rate.value() > 0.0)) {
    throw ConfigInvalid("target.rate_bps_hz", "must be > 0 for a power sweep");
  }
  const auto xs = linear_grid(range.first, range.last, step);
  const NoisePower sigma2 = cfg.noise();
  const auto& carriers = cfg.power_sweep_carriers_hz;
  const std::size_t per_carrier = 2 + n_list.size();

  SweepResult result;
  result.columns = {"x"};
  for (double c : carriers) {
    const std::string suffix = "_" + carrier_label(c) + "_dBm";
    result.columns.push_back("P_los" + suffix);
    result.columns.push_back("P_nlos" + suffix);
    for (auto n : n_list) result.columns.push_back(ris_column("P", n, suffix));
  }
  result.rows.assign(xs.size(), std::vector<double>(result.columns.size()));

  detail::for_each_index(xs.size(), exec, [&](std::size_t i) {
    auto& row = result.rows[i];
    row[0] = xs[i];
    for (std::size_t ci = 0; ci < carriers.size(); ++ci) {
      const ScenarioLinks links = build_links(at_carrier(cfg, carriers[ci]), xs[i]);
      const std::size_t base = 1 + ci * per_carrier;
      row[base] = watts_to_dbm(required_power_direct(cfg.target_rate, links.beta_df, sigma2));
      row[base + 1] =
          watts_to_dbm(required_power_direct(cfg.target_rate, links.beta_nf, sigma2));
      for (std::size_t k = 0; k < n_list.size(); ++k) {
        row[base + 2 + k] = watts_to_dbm(required_power_ris(
            cfg.target_rate, links.beta_nf, links.beta_nif, cfg.epsilon, n_list[k], sigma2));
      }
    }
  });
  check_finite_rows(result);
  return result;
}

SweepResult sweep_ee(const ScenarioConfig& cfg, std::span<const double> rate_grid, double ris_x,
                     Execution exec) {
  cfg.validate();
  if (rate_grid.empty()) throw ConfigInvalid("sweep.rate_grid", "must not be empty");
  for (std::size_t i = 0; i < rate_grid.size(); ++i) {
    if (!(rate_grid[i] >= 0.0) || !std::isfinite(rate_grid[i])) {
      throw ConfigInvalid("sweep.rate_grid", "rates must be finite and >= 0");
    }
    if (i > 0 && !(rate_grid[i] > rate_grid[i - 1])) {
      throw ConfigInvalid("sweep.rate_grid", "rates must be strictly increasing");
    }
  }
  const ScenarioLinks links = build_links(cfg, ris_x);
  const NoisePower sigma2 = cfg.noise();
  const PowerModel& model = cfg.power_model;

  SweepResult result;
  result.columns = {"R",          "N_opt",       "P_los_W",    "P_nlos_W",
                    "P_ris_W",    "Ptot_los_W",  "Ptot_nlos_W", "Ptot_ris_W",
                    "EE_los",     "EE_nlos",     "EE_ris"};
  result.rows.assign(rate_grid.size(), std::vector<double>(result.columns.size()));

  detail::for_each_index(rate_grid.size(), exec, [&](std::size_t i) {
    const SpectralRate r_bar(rate_grid[i]);
    SizingProblem prob{r_bar, sigma2, cfg.epsilon, links.beta_nf, links.beta_nif, model.p_e};
    const std::size_t n_opt = optimal_elements_int(prob, model);

    const double p_los = required_power_direct(r_bar, links.beta_df, sigma2);
    const double p_nlos = required_power_direct(r_bar, links.beta_nf, sigma2);
    const double p_ris =
        required_power_ris(r_bar, links.beta_nf, links.beta_nif, cfg.epsilon, n_opt, sigma2);
    const double tot_los = total_power(ScenarioKind::kDbsFbsLos, p_los, model);
    const double tot_nlos = total_power(ScenarioKind::kNbsFbsNlos, p_nlos, model);
    const double tot_ris = total_power(ScenarioKind::kNbsRisFbs, p_ris, model, n_opt);

    result.rows[i] = {r_bar.value(),
                      static_cast<double>(n_opt),
                      p_los,
                      p_nlos,
                      p_ris,
                      tot_los,
                      tot_nlos,
                      tot_ris,
                      energy_efficiency(cfg.bandwidth_hz, r_bar, tot_los),
                      energy_efficiency(cfg.bandwidth_hz, r_bar, tot_nlos),
                      energy_efficiency(cfg.bandwidth_hz, r_bar, tot_ris)};
  });
  check_finite_rows(result);
  return result;
}

std::vector<std::size_t> local_maxima(std::span<const double> values) {
  std::vector<std::size_t> peaks;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !(values[i] > values[i - 1])) continue;
    std::size_t next = i + 1;
    while (next < n && values[next] == values[i]) ++next;
    if (next == n || values[next] < values[i]) peaks.push_back(i);
  }
  return peaks;
}

std::string carrier_label(double carrier_hz) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%gGHz", carrier_hz / 1e9);
  return buf;
}

}  // namespace rislink
