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

#include "oamring/commands.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "oamring/error.hpp"

namespace oamring {

namespace {

using std::numbers::pi;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const RunOptions& opt, const std::string& name) : path_(opt.out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(path_, ec);
    path_ /= name;
    out_.open(path_, std::ios::binary | std::ios::trunc);
    if (!out_) fail(ErrorCode::Io, "cannot write '" + path_.string() + "'");
  }

  void comment(const std::string& line) { out_ << "# " << line << '\n'; }

  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }

  ~CsvWriter() = default;

  void close() {
    out_.close();
    if (!out_) fail(ErrorCode::Io, "failed writing '" + path_.string() + "'");
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

const char* solver_name(Solver s) { return s == Solver::LinearSpectral ? "linear" : "split-step"; }

void header(CsvWriter& w, const char* command, const ScenarioConfig& cfg, const ProtocolSpec* spec) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.hash());
  w.comment(std::string("oamring ") + command);
  w.comment(std::string("config_hash = ") + hash);
  const TrapSpec trap = cfg.trap();
  const RingParameters ring = to_internal(trap);
  const UnitSystem units = make_unit_system(trap);
  w.comment("time_unit_s = " + num(units.time_unit()));
  w.comment("energy_unit_j = " + num(units.energy_unit()));
  w.comment("omega_perp = " + num(ring.omega_perp));
  w.comment("sigma_u_over_r = " + num(ring.transverse_width()));
  w.comment("flux_angle = " + num(ring.flux_angle));
  w.comment("ideal_revival_time_s = " + num(revival_time(trap)));
  if (spec) {
    w.comment("coupling = " + num(spec->interaction.coupling_internal(trap)));
    w.comment(std::string("solver = ") + solver_name(spec->solver));
    w.comment("grid_points = " + std::to_string(spec->grid_points));
    w.comment("cutoff = " + std::to_string(spec->cutoff));
    w.comment("dt_s = " + num(spec->dt_fraction * revival_time(trap)));
  }
}

void log_line(const RunOptions& opt, const std::string& line) {
  if (opt.log) {
    std::fputs(line.c_str(), opt.log);
    std::fputc('\n', opt.log);
  }
}

}  // namespace

double run_revival_command(const ScenarioConfig& cfg, const RunOptions& opt) {
  ProtocolSpec spec = cfg.protocol();
  spec.snapshots = opt.snapshots;
  const ProtocolResult r = run_protocol(spec);

  CsvWriter ts(opt, "revival_timeseries.csv");
  header(ts, "revival", cfg, &spec);
  ts.comment("revival_time_s = " + num(r.revival_time_s));
  ts.row({"t_s", "fidelity", "imbalance", "centroid_rad"});
  for (const auto& p : r.series) ts.row({num(p.t_s), num(p.fidelity), num(p.imbalance), num(p.centroid_rad)});
  ts.close();

  if (opt.snapshots > 0) {
    CsvWriter sn(opt, "density_snapshots.csv");
    header(sn, "revival", cfg, &spec);
    sn.row({"t_s", "alpha_rad", "density_per_rad"});
    for (const auto& s : r.snapshots)
      for (std::size_t j = 0; j < s.density.angles.size(); ++j)
        sn.row({num(s.t_s), num(s.density.angles[j]), num(s.density.density[j])});
    sn.close();
  }
  log_line(opt, "T_rev = " + num(r.revival_time_s) + " s (ideal " + num(revival_time(spec.trap)) + " s)");
  log_line(opt, "imbalance = " + num(r.imbalance) + ", fidelity = " + num(r.fidelity));
  return r.revival_time_s;
}

std::vector<double> sweep_phases(const ScenarioConfig& cfg) {
  std::vector<double> phis = cfg.numbers("sweep_phi_rad");
  if (phis.empty()) {
    const int n = cfg.integer("sweep_phi_count");
    if (n < 1) fail(ErrorCode::Configuration, "sweep_phi_count must be >= 1");
    for (int i = 0; i < n; ++i) phis.push_back(n == 1 ? 0.0 : 2.0 * pi * i / (n - 1));
  }
  std::sort(phis.begin(), phis.end());
  return phis;
}

void run_sweep_phase_command(const ScenarioConfig& cfg, const RunOptions& opt) {
  const ProtocolSpec base = cfg.protocol();
  const auto phis = sweep_phases(cfg);
  for (const auto& variant : cfg.words("sweep_variants")) {
    ProtocolSpec spec = base;
    if (variant == "ideal") {
      spec.solver = Solver::LinearSpectral;
      spec.interaction.scattering_length_m = 0.0;
      spec.corrections = {};
      spec.imprint.profile = ImprintProfile::Uniform;
    } else if (variant == "noninteracting") {
      // Without interactions the exact spectral propagator is used.
      spec.solver = Solver::LinearSpectral;
      spec.interaction.scattering_length_m = 0.0;
    } else if (variant == "interacting") {
      spec.solver = Solver::SplitStep;
    } else {
      fail(ErrorCode::Configuration, "unknown sweep variant '" + variant + "'");
    }
    const auto points = sweep_phase(spec, phis, opt.threads);
    CsvWriter w(opt, "sweep_phase_" + variant + ".csv");
    header(w, "sweep-phase", cfg, &spec);
    w.comment("variant = " + variant);
    w.row({"phi_rad", "imbalance"});
    for (const auto& p : points) w.row({num(p.phi_rad), num(p.imbalance)});
    w.close();
    log_line(opt, "sweep-phase " + variant + ": " + std::to_string(points.size()) + " points");
  }
}

void run_spectrum_command(const ScenarioConfig& cfg, const RunOptions& opt) {
  const TrapSpec trap = cfg.trap();
  const RingParameters ring = to_internal(trap);
  const UnitSystem units = make_unit_system(trap);
  const int lmax = cfg.integer("spectrum_l_max");
  if (lmax < 0) fail(ErrorCode::Configuration, "spectrum_l_max must be >= 0");
  const Corrections on = cfg.corrections();

  CsvWriter w(opt, "spectrum.csv");
  header(w, "spectrum", cfg, nullptr);
  w.comment(std::string("included = ") + (on.tilt ? "tilt " : "") + (on.centrifugal ? "centrifugal " : "") +
            (on.ellipticity ? "ellipticity" : ""));
  for (const auto& warning : perturbative_warnings(ring)) w.comment("warning: " + warning);
  w.row({"l", "E_ideal_J", "dE_tilt_J", "dE_centrifugal_J", "dE_ellipticity_J", "E_total_J", "E_ideal",
         "dE_tilt", "dE_centrifugal", "dE_ellipticity", "E_total"});
  for (int l = 0; l <= lmax; ++l) {
    const double e0 = ideal_energy(l);
    const double tilt = tilt_shift(l, ring).energy;
    const double cent = centrifugal_shift(l, 0, ring) - 0.5 * ring.omega_perp;
    const double ell = ellipticity_shift(l, ring).energy;
    const double total = e0 + (on.tilt ? tilt : 0.0) + (on.centrifugal ? cent : 0.0) + (on.ellipticity ? ell : 0.0);
    auto si = [&](double e) { return num(units.energy_to_si(e)); };
    w.row({std::to_string(l), si(e0), si(tilt), si(cent), si(ell), si(total), num(e0), num(tilt), num(cent),
           num(ell), num(total)});
  }
  w.close();
  log_line(opt, "spectrum: " + std::to_string(lmax + 1) + " rows");
}

void run_sense_command(const ScenarioConfig& cfg, const RunOptions& opt) {
  using namespace sensing;
  const TrapSpec trap = cfg.trap();
  const double atoms = cfg.number("atom_number");
  const double q = cfg.number("sense_charge_e") * PhysicalConstants::elementary_charge;
  const double pulse = cfg.number("sense_pulse_us") > 0.0 ? cfg.number("sense_pulse_us") * 1e-6
                                                          : dispersion_time(trap);
  double resolution = cfg.number("sense_resolution_rad");
  if (resolution <= 0.0) resolution = trap.transverse_width_m() / trap.radius_m;
  const std::string density_kind = cfg.get("sense_density");
  double density = 0.0;
  if (density_kind == "peak") density = peak_density(atoms, trap);
  else if (density_kind == "mean") density = mean_density(atoms, trap);
  else fail(ErrorCode::Configuration, "sense_density must be 'peak' or 'mean'");

  struct Row {
    std::string item;
    double value;
    std::string unit;
  };
  std::vector<Row> rows;
  auto gauge = [&](const std::string& name, const GaugeScenario& s) {
    const double action = flux_action(s, trap);
    rows.push_back({name + ".flux_action", action, "J s"});
    rows.push_back({name + ".rotation", action / PhysicalConstants::hbar, "rad"});
    rows.push_back({name + ".displacement", trap.radius_m * action / PhysicalConstants::hbar, "m"});
  };
  rows.push_back({"input.charge", q, "C"});
  rows.push_back({"input.field", cfg.number("sense_field_t"), "T"});
  gauge("charged_magnetic", ChargedMagnetic{q, cfg.number("sense_field_t")});
  rows.push_back({"input.ac_dipole", cfg.number("sense_ac_dipole_j_t"), "J/T"});
  rows.push_back({"input.ac_field", cfg.number("sense_ac_field_v_m"), "V/m"});
  gauge("aharonov_casher", AharonovCasher{cfg.number("sense_ac_dipole_j_t"), cfg.number("sense_ac_field_v_m")});
  rows.push_back({"input.electric_dipole", cfg.number("sense_dipole_c_m"), "C m"});
  rows.push_back({"input.dipole_field", cfg.number("sense_dipole_field_t"), "T"});
  gauge("electric_dipole_magnetic",
        ElectricDipoleMagnetic{cfg.number("sense_dipole_c_m"), cfg.number("sense_dipole_field_t")});
  rows.push_back({"input.rotation_rate", cfg.number("sense_rotation_rad_s"), "rad/s"});
  gauge("rotating_frame", RotatingFrame{cfg.number("sense_rotation_rad_s")});

  const double tilt = cfg.number("sense_tilt_rad");
  rows.push_back({"input.tilt", tilt, "rad"});
  rows.push_back({"input.pulse", pulse, "s"});
  rows.push_back({"gravitational_phase", gravitational_phase(tilt, trap, pulse), "rad"});
  const double a = cfg.number("scattering_length_a0") * PhysicalConstants::bohr_radius;
  rows.push_back({"input.scattering_length", a, "m"});
  rows.push_back({"input.density", density, "1/m^3"});
  rows.push_back({"scattering_phase", scattering_phase(a, density, pulse, trap), "rad"});
  rows.push_back({"scattering_phase_per_a0",
                  scattering_phase(PhysicalConstants::bohr_radius, density, pulse, trap), "rad"});
  const double phase_res = cfg.number("sense_phase_resolution_rad");
  rows.push_back({"input.phase_resolution", phase_res, "rad"});
  rows.push_back({"scattering_length_resolution_a0",
                  scattering_length_resolution(phase_res, density, pulse, trap) / PhysicalConstants::bohr_radius,
                  "a0"});
  rows.push_back({"input.angular_resolution", resolution, "rad"});
  if (q != 0.0) rows.push_back({"min_detectable_field", min_detectable_field(resolution, q, trap), "T"});

  CsvWriter w(opt, "sense.csv");
  header(w, "sense", cfg, nullptr);
  w.row({"item", "value", "unit"});
  for (const auto& r : rows) w.row({r.item, num(r.value), r.unit});
  w.close();
  for (const auto& r : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-40s %24.17g %s", r.item.c_str(), r.value, r.unit.c_str());
    log_line(opt, line);
  }
}

void run_timing_command(const ScenarioConfig& cfg, const RunOptions& opt) {
  const ProtocolSpec spec = cfg.protocol();
  std::vector<double> offsets;
  for (double us : cfg.numbers("timing_offsets_us")) offsets.push_back(us * 1e-6);
  const auto points = timing_sensitivity(spec, offsets, opt.threads);
  CsvWriter w(opt, "timing.csv");
  header(w, "timing", cfg, &spec);
  w.comment("dispersion_time_s = " + num(sensing::dispersion_time(spec.trap)));
  w.row({"offset_s", "fidelity", "imbalance"});
  for (const auto& p : points) w.row({num(p.offset_s), num(p.fidelity), num(p.imbalance)});
  w.close();
  log_line(opt, "timing: " + std::to_string(points.size()) + " offsets");
}

}  // namespace oamring
