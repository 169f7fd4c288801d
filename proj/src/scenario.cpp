/*
  Copyright 2026 The oamring Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "oamring/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "oamring/error.hpp"

namespace oamring {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::Configuration, what); }

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
    config_error("key '" + key + "': '" + text + "' is not a finite number");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::map<std::string, std::string>& ScenarioConfig::schema() {
  // Defaults describe the 39K scenario: R = 5.9 um, omega_perp = 6.4e3 rad/s,
  // N = 2e4, a = 1 a0.
  static const std::map<std::string, std::string> s = {
      {"mass_u", ""},
      {"radius_um", ""},
      {"omega_perp_krad_s", ""},
      {"omega_perp_khz", ""},
      {"eccentricity", "0"},
      {"tilt_v0_j", "0"},
      {"tilt_phase_rad", "0"},
      {"flux_angle_rad", "0"},
      {"flux_on_ms", "0"},
      {"scattering_length_a0", "1"},
      {"atom_number", "20000"},
      {"center_rad", "0"},
      {"imprint_phase_rad", "1.0471975511965976"},
      {"imprint_profile", "cos2"},
      {"imprint_window_lo_rad", "1.5707963267948966"},
      {"imprint_window_hi_rad", "4.7123889803846897"},
      {"imprint_duration_us", "0"},
      {"imprint_offset_us", "0"},
      {"readout_offset_us", "0"},
      {"readout_weight", "cos2"},
      {"solver", "split-step"},
      {"corrections", "centrifugal"},
      {"grid_points", "512"},
      {"cutoff", "128"},
      {"dt_trev", "5e-6"},
      {"revival_window_lo_trev", "0.97"},
      {"revival_window_hi_trev", "1.03"},
      {"revival_resolution_us", "1e-4"},
      {"series_samples", "401"},
      {"sweep_phi_rad", ""},
      {"sweep_phi_count", "13"},
      {"sweep_variants", "ideal,noninteracting,interacting"},
      {"timing_offsets_us", "0,50,150,500"},
      {"spectrum_l_max", "40"},
      {"sense_charge_e", "1"},
      {"sense_field_t", "1e-7"},
      {"sense_ac_dipole_j_t", "0"},
      {"sense_ac_field_v_m", "0"},
      {"sense_dipole_c_m", "0"},
      {"sense_dipole_field_t", "0"},
      {"sense_rotation_rad_s", "0"},
      {"sense_tilt_rad", "1e-4"},
      {"sense_pulse_us", "0"},
      {"sense_resolution_rad", "0"},
      {"sense_phase_resolution_rad", "0.3"},
      {"sense_density", "peak"},
  };
  return s;
}

ScenarioConfig ScenarioConfig::parse(const std::string& text) {
  ScenarioConfig cfg;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      config_error("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (cfg.values_.count(key)) config_error("duplicate key '" + key + "'");
    cfg.set(key, trim(line.substr(eq + 1)));
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) config_error("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

void ScenarioConfig::set(const std::string& key, const std::string& value) {
  if (!schema().count(key)) config_error("unknown key '" + key + "'");
  values_[key] = trim(value);
}

bool ScenarioConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string ScenarioConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it != values_.end()) return it->second;
  const auto d = schema().find(key);
  if (d == schema().end()) config_error("unknown key '" + key + "'");
  return d->second;
}

double ScenarioConfig::number(const std::string& key) const {
  const std::string v = get(key);
  if (v.empty()) config_error("missing required key '" + key + "'");
  return parse_double(key, v);
}

int ScenarioConfig::integer(const std::string& key) const {
  const double v = number(key);
  if (v != std::floor(v) || std::abs(v) > 1e9) config_error("key '" + key + "' must be an integer");
  return static_cast<int>(v);
}

std::vector<double> ScenarioConfig::numbers(const std::string& key) const {
  std::vector<double> out;
  for (const auto& w : split_list(get(key))) out.push_back(parse_double(key, w));
  return out;
}

std::vector<std::string> ScenarioConfig::words(const std::string& key) const {
  return split_list(get(key));
}

void ScenarioConfig::require_complete() const {
  for (const char* key : {"mass_u", "radius_um"})
    if (get(key).empty()) config_error(std::string("missing required key '") + key + "'");
  const bool rad = !get("omega_perp_krad_s").empty();
  const bool hz = !get("omega_perp_khz").empty();
  if (!rad && !hz) config_error("missing required key 'omega_perp_krad_s' (or 'omega_perp_khz')");
  if (rad && hz) config_error("give only one of 'omega_perp_krad_s' and 'omega_perp_khz'");
}

std::string ScenarioConfig::canonical() const {
  std::string out;
  for (const auto& [key, def] : schema()) out += key + " = " + get(key) + "\n";
  return out;
}

std::uint64_t ScenarioConfig::hash() const { return fnv1a64(canonical()); }

TrapSpec ScenarioConfig::trap() const {
  require_complete();
  TrapSpec t;
  t.mass_kg = number("mass_u") * PhysicalConstants::atomic_mass_unit;
  t.radius_m = number("radius_um") * 1e-6;
  t.omega_perp_rad_s = get("omega_perp_khz").empty()
                           ? number("omega_perp_krad_s") * 1e3
                           : number("omega_perp_khz") * 1e3 * 2.0 * std::numbers::pi;
  t.eccentricity = number("eccentricity");
  t.tilt_amplitude_j = number("tilt_v0_j");
  t.tilt_phase_rad = number("tilt_phase_rad");
  t.flux_action_js = number("flux_angle_rad") * PhysicalConstants::hbar;
  try {
    validate(t);
  } catch (const Error& e) {
    config_error(e.what());
  }
  return t;
}

Corrections ScenarioConfig::corrections() const {
  Corrections out;
  for (const auto& c : words("corrections")) {
    if (c == "none") continue;
    if (c == "tilt") out.tilt = true;
    else if (c == "centrifugal") out.centrifugal = true;
    else if (c == "ellipticity") out.ellipticity = true;
    else config_error("unknown correction '" + c + "'");
  }
  return out;
}

ProtocolSpec ScenarioConfig::protocol() const {
  ProtocolSpec p;
  p.trap = trap();
  p.interaction.scattering_length_m = number("scattering_length_a0") * PhysicalConstants::bohr_radius;
  p.interaction.atom_number = number("atom_number");
  p.flux_on_s = number("flux_on_ms") * 1e-3;
  p.center_rad = number("center_rad");

  p.imprint.phase_rad = number("imprint_phase_rad");
  const std::string profile = get("imprint_profile");
  if (profile == "cos2") p.imprint.profile = ImprintProfile::CosSquared;
  else if (profile == "uniform") p.imprint.profile = ImprintProfile::Uniform;
  else config_error("imprint_profile must be 'cos2' or 'uniform'");
  p.imprint.window = {number("imprint_window_lo_rad"), number("imprint_window_hi_rad")};
  p.imprint.duration_s = number("imprint_duration_us") * 1e-6;
  p.imprint_offset_s = number("imprint_offset_us") * 1e-6;
  p.readout_offset_s = number("readout_offset_us") * 1e-6;

  const std::string weight = get("readout_weight");
  if (weight == "cos2") p.readout_weight = Weight::CosSquared;
  else if (weight == "uniform") p.readout_weight = Weight::Uniform;
  else config_error("readout_weight must be 'cos2' or 'uniform'");

  const std::string solver = get("solver");
  if (solver == "linear") p.solver = Solver::LinearSpectral;
  else if (solver == "split-step") p.solver = Solver::SplitStep;
  else config_error("solver must be 'linear' or 'split-step'");

  p.corrections = corrections();
  p.grid_points = integer("grid_points");
  p.cutoff = integer("cutoff");
  p.dt_fraction = number("dt_trev");
  p.search.lo_fraction = number("revival_window_lo_trev");
  p.search.hi_fraction = number("revival_window_hi_trev");
  p.search.resolution_s = number("revival_resolution_us") * 1e-6;
  p.series_samples = integer("series_samples");
  try {
    validate(p);
  } catch (const Error& e) {
    config_error(e.what());
  }
  return p;
}

}  // namespace oamring
