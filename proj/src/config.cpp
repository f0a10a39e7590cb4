// SPDX-License-Identifier: Apache-2.0
#include "rislink/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

using nlohmann::json;

// Reads one JSON object section, records defaulted keys, and rejects keys it
// was never asked about.
class Section {
 public:
  Section(const json& doc, std::string name, std::vector<std::string>& defaulted)
      : name_(std::move(name)), defaulted_(defaulted) {
    if (doc.contains(name_)) {
      node_ = &doc.at(name_);
      if (!node_->is_object()) throw ConfigInvalid(name_, "must be an object");
    }
  }

  std::string path(const std::string& key) const { return name_ + "." + key; }

  const json* find(const std::string& key) {
    known_.insert(key);
    if (node_ == nullptr || !node_->contains(key)) {
      defaulted_.push_back(path(key));
      return nullptr;
    }
    return &node_->at(key);
  }

  double number(const std::string& key, double fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_number()) throw ConfigInvalid(path(key), "must be a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) throw ConfigInvalid(path(key), "must be finite");
    return x;
  }

  bool boolean(const std::string& key, bool fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) throw ConfigInvalid(path(key), "must be true or false");
    return v->get<bool>();
  }

  NodePosition position(const std::string& key, NodePosition fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
      throw ConfigInvalid(path(key), "must be an [x, y] pair of numbers");
    }
    return {(*v)[0].get<double>(), (*v)[1].get<double>()};
  }

  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_array() || v->empty()) throw ConfigInvalid(path(key), "must be a non-empty array");
    std::vector<double> out;
    for (const auto& item : *v) {
      if (!item.is_number()) throw ConfigInvalid(path(key), "entries must be numbers");
      out.push_back(item.get<double>());
    }
    return out;
  }

  std::vector<std::size_t> counts(const std::string& key, std::vector<std::size_t> fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_array() || v->empty()) throw ConfigInvalid(path(key), "must be a non-empty array");
    std::vector<std::size_t> out;
    for (const auto& item : *v) {
      if (!item.is_number_integer() || item.get<long long>() < 0) {
        throw ConfigInvalid(path(key), "entries must be non-negative integers");
      }
      out.push_back(item.get<std::size_t>());
    }
    return out;
  }

  void reject_unknown() const {
    if (node_ == nullptr) return;
    for (const auto& item : node_->items()) {
      if (!known_.contains(item.key())) throw ConfigInvalid(path(item.key()), "unknown key");
    }
  }

 private:
  std::string name_;
  std::vector<std::string>& defaulted_;
  const json* node_ = nullptr;
  std::set<std::string> known_;
};

std::vector<double> rate_grid_from(const json& v, const std::string& field) {
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& item : v) {
      if (!item.is_number()) throw ConfigInvalid(field, "entries must be numbers");
      out.push_back(item.get<double>());
    }
    return out;
  }
  if (!v.is_object()) throw ConfigInvalid(field, "must be an array or {start, stop, step}");
  for (const auto& item : v.items()) {
    if (item.key() != "start" && item.key() != "stop" && item.key() != "step") {
      throw ConfigInvalid(field + "." + item.key(), "unknown key");
    }
  }
  auto get = [&](const char* key) {
    if (!v.contains(key) || !v.at(key).is_number()) {
      throw ConfigInvalid(field + "." + key, "must be a number");
    }
    return v.at(key).get<double>();
  };
  const double start = get("start");
  const double stop = get("stop");
  const double step = get("step");
  if (!(step > 0.0)) throw ConfigInvalid(field + ".step", "must be > 0");
  if (!(stop >= start)) throw ConfigInvalid(field + ".stop", "must be >= start");
  return linear_grid(start, stop, step);
}

void validate_sweep(const SweepSettings& sweep) {
  if (!(sweep.step > 0.0)) throw ConfigInvalid("sweep.step_m", "must be > 0");
  if (!(sweep.x.last >= sweep.x.first)) {
    throw ConfigInvalid("sweep.x_max_m", "must be >= sweep.x_min_m");
  }
  if (sweep.rate_grid.empty()) throw ConfigInvalid("sweep.rate_grid", "must not be empty");
  for (std::size_t i = 0; i < sweep.rate_grid.size(); ++i) {
    if (!(sweep.rate_grid[i] >= 0.0) || !std::isfinite(sweep.rate_grid[i])) {
      throw ConfigInvalid("sweep.rate_grid", "rates must be finite and >= 0");
    }
    if (i > 0 && !(sweep.rate_grid[i] > sweep.rate_grid[i - 1])) {
      throw ConfigInvalid("sweep.rate_grid", "rates must be strictly increasing");
    }
  }
}

}  // namespace

std::vector<double> default_rate_grid() { return linear_grid(0.5, 30.0, 0.5); }

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigInvalid("<root>", "configuration must be a JSON object");
  static const std::set<std::string> kSections = {"geometry", "radio",  "ris",
                                                  "power_model", "target", "sweep"};
  for (const auto& item : doc.items()) {
    if (!kSections.contains(item.key())) throw ConfigInvalid(item.key(), "unknown section");
  }

  RunConfig out;
  ScenarioConfig& s = out.scenario;
  SweepSettings& w = out.sweep;
  auto& defaulted = out.defaulted;

  Section geometry(doc, "geometry", defaulted);
  s.nbs = geometry.position("nbs", s.nbs);
  s.fbs = geometry.position("fbs", s.fbs);
  s.dbs = geometry.position("dbs", s.dbs);
  s.ris_height = geometry.number("ris_height_m", s.ris_height);
  w.ris_x = geometry.number("ris_x_m", w.ris_x);
  geometry.reject_unknown();

  Section radio(doc, "radio", defaulted);
  s.carrier_hz = radio.number("carrier_ghz", s.carrier_hz / 1e9) * 1e9;
  s.bandwidth_hz = radio.number("bandwidth_mhz", s.bandwidth_hz / 1e6) * 1e6;
  s.noise_figure_db = radio.number("noise_figure_db", s.noise_figure_db);
  s.gains.gt_dbi = radio.number("antenna_gain_tx_dbi", s.gains.gt_dbi);
  s.gains.gr_dbi = radio.number("antenna_gain_rx_dbi", s.gains.gr_dbi);
  s.tx_power_w = dbm_to_watts(radio.number("tx_power_dbm", 30.0));
  s.floor_policy = radio.boolean("allow_short_distance", false) ? FloorPolicy::kWarn
                                                                 : FloorPolicy::kReject;
  radio.reject_unknown();

  Section ris(doc, "ris", defaulted);
  s.epsilon = ris.number("epsilon", s.epsilon);
  w.n_list = ris.counts("elements", w.n_list);
  ris.reject_unknown();

  Section power(doc, "power_model", defaulted);
  s.power_model.nu = power.number("nu", s.power_model.nu);
  s.power_model.p_d = power.number("p_d_mw", s.power_model.p_d * 1e3) * 1e-3;
  s.power_model.p_n = power.number("p_n_mw", s.power_model.p_n * 1e3) * 1e-3;
  s.power_model.p_f = power.number("p_f_mw", s.power_model.p_f * 1e3) * 1e-3;
  s.power_model.p_e = power.number("p_e_mw", s.power_model.p_e * 1e3) * 1e-3;
  power.reject_unknown();

  Section target(doc, "target", defaulted);
  const double rate = target.number("rate_bps_hz", s.target_rate.value());
  if (!(rate >= 0.0)) throw ConfigInvalid("target.rate_bps_hz", "must be >= 0");
  s.target_rate = SpectralRate(rate);
  s.threshold_fraction = target.number("threshold_fraction", s.threshold_fraction);
  target.reject_unknown();

  Section sweep(doc, "sweep", defaulted);
  w.x.first = sweep.number("x_min_m", w.x.first);
  w.x.last = sweep.number("x_max_m", w.x.last);
  w.step = sweep.number("step_m", w.step);
  std::vector<double> carriers_ghz;
  for (double c : s.power_sweep_carriers_hz) carriers_ghz.push_back(c / 1e9);
  carriers_ghz = sweep.numbers("carriers_ghz", carriers_ghz);
  s.power_sweep_carriers_hz.clear();
  for (double c : carriers_ghz) s.power_sweep_carriers_hz.push_back(c * 1e9);
  if (const json* grid = sweep.find("rate_grid")) {
    w.rate_grid = rate_grid_from(*grid, "sweep.rate_grid");
  } else {
    w.rate_grid = default_rate_grid();
  }
  sweep.reject_unknown();

  s.validate();
  validate_sweep(w);
  return out;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigInvalid(path.string(), std::string("not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const RunConfig& config) {
  const ScenarioConfig& s = config.scenario;
  const SweepSettings& w = config.sweep;
  std::vector<double> carriers_ghz;
  for (double c : s.power_sweep_carriers_hz) carriers_ghz.push_back(c / 1e9);
  return json{
      {"geometry",
       {{"nbs", {s.nbs.x, s.nbs.y}},
        {"fbs", {s.fbs.x, s.fbs.y}},
        {"dbs", {s.dbs.x, s.dbs.y}},
        {"ris_height_m", s.ris_height},
        {"ris_x_m", w.ris_x}}},
      {"radio",
       {{"carrier_ghz", s.carrier_hz / 1e9},
        {"bandwidth_mhz", s.bandwidth_hz / 1e6},
        {"noise_figure_db", s.noise_figure_db},
        {"antenna_gain_tx_dbi", s.gains.gt_dbi},
        {"antenna_gain_rx_dbi", s.gains.gr_dbi},
        {"tx_power_dbm", watts_to_dbm(s.tx_power_w)},
        {"allow_short_distance", s.floor_policy == FloorPolicy::kWarn}}},
      {"ris", {{"epsilon", s.epsilon}, {"elements", w.n_list}}},
      {"power_model",
       {{"nu", s.power_model.nu},
        {"p_d_mw", s.power_model.p_d * 1e3},
        {"p_n_mw", s.power_model.p_n * 1e3},
        {"p_f_mw", s.power_model.p_f * 1e3},
        {"p_e_mw", s.power_model.p_e * 1e3}}},
      {"target",
       {{"rate_bps_hz", s.target_rate.value()}, {"threshold_fraction", s.threshold_fraction}}},
      {"sweep",
       {{"x_min_m", w.x.first},
        {"x_max_m", w.x.last},
        {"step_m", w.step},
        {"carriers_ghz", carriers_ghz},
        {"rate_grid", w.rate_grid}}},
  };
}

}  // namespace rislink
