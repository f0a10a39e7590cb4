// SPDX-License-Identifier: Apache-2.0
#include "rislink/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rislink/csv.hpp"
#include "rislink/errors.hpp"
#include "rislink/ris_sizing.hpp"

namespace rislink {
namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::optional<double> step;
  std::optional<double> carrier_ghz;
  std::vector<std::size_t> n_list;
  std::optional<double> rate;
  long long seed = 0;
  std::size_t search_limit = kDefaultSearchLimit;
};

std::string fmt(double v) { return format_number(v); }

// Fixed-width text table for the stdout summary.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        out << r[c] << std::string(width[c] - r[c].size() + (c + 1 < r.size() ? 2 : 0), ' ');
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

nlohmann::json apply_overrides(const std::string& subcommand, const Options& opt,
                               RunConfig& cfg) {
  nlohmann::json applied = nlohmann::json::object();
  if (opt.step) {
    if (!(*opt.step > 0.0)) throw ConfigInvalid("--step", "must be > 0");
    cfg.sweep.step = *opt.step;
    applied["step_m"] = *opt.step;
  }
  if (opt.carrier_ghz) {
    if (!(*opt.carrier_ghz > 0.0)) throw ConfigInvalid("--carrier", "must be > 0");
    if (subcommand == "power-vs-position") {
      cfg.scenario.power_sweep_carriers_hz = {*opt.carrier_ghz * 1e9};
    } else {
      cfg.scenario.carrier_hz = *opt.carrier_ghz * 1e9;
    }
    applied["carrier_ghz"] = *opt.carrier_ghz;
  }
  if (!opt.n_list.empty()) {
    cfg.sweep.n_list = opt.n_list;
    applied["elements"] = opt.n_list;
  }
  if (opt.rate) {
    if (!(*opt.rate >= 0.0) || !std::isfinite(*opt.rate)) {
      throw ConfigInvalid("--rate", "must be finite and >= 0");
    }
    cfg.scenario.target_rate = SpectralRate(*opt.rate);
    applied["rate_bps_hz"] = *opt.rate;
  }
  if (subcommand == "size-ris") applied["search_limit"] = opt.search_limit;
  cfg.scenario.validate();
  return applied;
}

void summarize_rates(const SweepResult& r, const ScenarioConfig& cfg, std::ostream& out) {
  const double r_los = r.rows.front()[1];
  const double r_nlos = r.rows.front()[2];
  const double threshold = cfg.threshold_fraction * r_los;
  out << "pre-failure rate (DBS-FBS LoS): " << fmt(r_los) << " bit/s/Hz\n";
  out << "direct NLoS rate (NBS-FBS):     " << fmt(r_nlos) << " bit/s/Hz\n";
  out << "threshold rate (" << fmt(cfg.threshold_fraction) << " x LoS):  " << fmt(threshold)
      << " bit/s/Hz\n";
  Table table({"curve", "best_x_m", "peak_rate", "meets_threshold", "positions_meeting",
               "beats_los_at_best"});
  const auto xs = r.column("x");
  for (std::size_t c = 3; c < r.columns.size(); ++c) {
    const auto values = r.column(r.columns[c]);
    const auto best = static_cast<std::size_t>(
        std::max_element(values.begin(), values.end()) - values.begin());
    const auto meeting = std::count_if(values.begin(), values.end(),
                                       [&](double v) { return v >= threshold; });
    table.add({r.columns[c], fmt(xs[best]), fmt(values[best]), meeting > 0 ? "yes" : "no",
               std::to_string(meeting), values[best] > r_los ? "yes" : "no"});
  }
  table.print(out);
}

void summarize_power(const SweepResult& r, std::ostream& out) {
  Table table({"curve", "min_dBm", "x_at_min_m", "max_dBm", "above_30dBm"});
  const auto xs = r.column("x");
  for (std::size_t c = 1; c < r.columns.size(); ++c) {
    const auto values = r.column(r.columns[c]);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const auto above =
        std::count_if(values.begin(), values.end(), [](double v) { return v > 30.0; });
    table.add({r.columns[c], fmt(*lo), fmt(xs[static_cast<std::size_t>(lo - values.begin())]),
               fmt(*hi), std::to_string(above) + "/" + std::to_string(values.size())});
  }
  table.print(out);
}

void summarize_ee(const SweepResult& r, std::ostream& out) {
  const auto rates = r.column("R");
  const auto n_opt = r.column("N_opt");
  const auto first_ris = std::find_if(n_opt.begin(), n_opt.end(), [](double n) { return n > 0; });
  if (first_ris == n_opt.end()) {
    out << "optimal RIS size is 0 over the whole rate grid\n";
  } else {
    out << "RIS first pays off at R = "
        << fmt(rates[static_cast<std::size_t>(first_ris - n_opt.begin())]) << " bit/s/Hz\n";
  }
  Table table({"R", "N_opt", "EE_los", "EE_nlos", "EE_ris"});
  for (const auto& row : r.rows) {
    table.add({fmt(row[0]), fmt(row[1]), fmt(row[8]), fmt(row[9]), fmt(row[10])});
  }
  table.print(out);
}

SweepResult size_ris(const RunConfig& cfg, std::size_t search_limit, std::ostream& out) {
  const ScenarioConfig& s = cfg.scenario;
  const ScenarioLinks links = build_links(s, cfg.sweep.ris_x);
  const PowerModel& model = s.power_model;
  const SizingProblem prob{s.target_rate, s.noise(), s.epsilon, links.beta_nf, links.beta_nif,
                           model.p_e};
  const double n_real = optimal_elements_real(prob, model.nu);
  const auto lo = static_cast<std::size_t>(std::floor(n_real));
  const auto hi = static_cast<std::size_t>(std::ceil(n_real));
  const std::size_t n_int = optimal_elements_int(prob, model);
  const std::size_t n_brute = brute_force_optimal(prob, model, search_limit);

  out << "target rate: " << fmt(s.target_rate.value()) << " bit/s/Hz at RIS x = "
      << fmt(cfg.sweep.ris_x) << " m, h = " << fmt(s.ris_height) << " m\n";
  out << "N* (real) = " << fmt(n_real) << '\n';
  Table table({"candidate", "N", "Ptot_W"});
  table.add({"zero", "0", fmt(sizing_total_power(prob, model, 0))});
  table.add({"floor", std::to_string(lo), fmt(sizing_total_power(prob, model, lo))});
  table.add({"ceil", std::to_string(hi), fmt(sizing_total_power(prob, model, hi))});
  table.print(out);
  out << "N* = " << n_int << '\n';
  out << "brute force over [0, " << search_limit << "]: " << n_brute << " ("
      << (n_brute == n_int ? "confirmed" : "MISMATCH") << ")\n";

  SweepResult r;
  r.columns = {"R", "N_real", "N_floor", "N_ceil", "Ptot_floor_W", "Ptot_ceil_W", "N_opt",
               "N_brute"};
  r.rows.push_back({s.target_rate.value(), n_real, static_cast<double>(lo),
                    static_cast<double>(hi), sizing_total_power(prob, model, lo),
                    sizing_total_power(prob, model, hi), static_cast<double>(n_int),
                    static_cast<double>(n_brute)});
  return r;
}

int execute(const std::string& subcommand, const Options& opt, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg = opt.config_path.empty() ? parse_config(nlohmann::json::object())
                                          : load_config(opt.config_path);
  if (std::find(cfg.defaulted.begin(), cfg.defaulted.end(), "ris.epsilon") !=
      cfg.defaulted.end()) {
    err << "notice: ris.epsilon not set; using " << fmt(cfg.scenario.epsilon) << '\n';
  }
  if (!cfg.defaulted.empty()) {
    err << "notice: defaults used for:";
    for (const auto& f : cfg.defaulted) err << ' ' << f;
    err << '\n';
  }
  const nlohmann::json overrides = apply_overrides(subcommand, opt, cfg);
  if (subcommand != "size-ris" && opt.out_path.empty()) {
    throw ConfigInvalid("--out", "required for " + subcommand);
  }

  SweepResult result;
  const auto& s = cfg.scenario;
  const auto& w = cfg.sweep;
  if (subcommand == "rate-vs-position") {
    result = sweep_position(s, w.n_list, w.x, w.step);
    summarize_rates(result, s, out);
  } else if (subcommand == "power-vs-position") {
    result = sweep_power(s, w.n_list, w.x, w.step);
    summarize_power(result, out);
  } else if (subcommand == "ee-vs-rate") {
    result = sweep_ee(s, w.rate_grid, w.ris_x);
    summarize_ee(result, out);
  } else {
    result = size_ris(cfg, opt.search_limit, out);
  }

  if (!opt.out_path.empty()) {
    const std::filesystem::path csv_path(opt.out_path);
    write_csv_file(csv_path, result);
    RunManifest manifest{subcommand, csv_path,    opt.config_path, config_to_json(cfg),
                         overrides,  opt.seed,    true};
    write_manifest(manifest_path_for(csv_path), manifest);
  }
  return kExitOk;
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
  return nlohmann::json{{"tool", kToolName},
                        {"version", kToolVersion},
                        {"subcommand", subcommand},
                        {"outputs", {{"csv", csv_path.string()}}},
                        {"config_path", config_path},
                        {"config", config},
                        {"overrides", overrides},
                        {"seed", seed},
                        {"deterministic", deterministic}};
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path) {
  auto path = csv_path;
  path.replace_extension(".manifest.json");
  return path;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << manifest.to_json().dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"RIS-assisted X-haul outage compensation: rates, powers, energy efficiency "
               "and RIS sizing"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"rate-vs-position", "rates of all scenarios while the RIS moves along the x-axis"},
      {"power-vs-position", "transmit power needed for the target rate along the x-axis"},
      {"ee-vs-rate", "energy efficiency and optimal RIS size versus target rate"},
      {"size-ris", "optimal RIS element count for the target rate"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", opt.config_path, "JSON configuration (defaults if omitted)");
    sub->add_option("--out", opt.out_path, "CSV output path; manifest is written alongside");
    sub->add_option("--step", opt.step, "position grid step in meters");
    sub->add_option("--carrier", opt.carrier_ghz, "carrier frequency in GHz");
    sub->add_option("--n", opt.n_list, "comma-separated RIS element counts")->delimiter(',');
    sub->add_option("--rate", opt.rate, "target rate in bit/s/Hz");
    sub->add_option("--seed", opt.seed, "recorded in the manifest; the math is deterministic");
    if (name == "size-ris") {
      sub->add_option("--search-limit", opt.search_limit, "brute-force upper bound on N");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigInvalid;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    return execute(subcommand, opt, out, err);
  } catch (const ConfigInvalid& e) {
    err << "error: invalid configuration: " << e.what() << '\n';
    return kExitConfigInvalid;
  } catch (const ModelDomainError& e) {
    err << "error: model domain: " << e.what() << '\n';
    return kExitModelDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: model domain: " << e.what() << '\n';
    return kExitModelDomain;
  } catch (const IoError& e) {
    err << "error: i/o: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace rislink
