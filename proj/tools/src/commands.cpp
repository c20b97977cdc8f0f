#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "phasespace/distributions.hpp"
#include "phasespace/error.hpp"
#include "phasespace/measurement.hpp"
#include "phasespace/pointer.hpp"
#include "phasespace/sampler.hpp"
#include "phasespace/serialize.hpp"

namespace phasespace::cli {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr double kNormTolerance = 1e-6;
constexpr double kMarginalTolerance = 1e-6;
constexpr double kPositivityFloor = -1e-12;
constexpr double kOriginTolerance = 1e-8;
constexpr double kTvThreshold = 0.02;
constexpr double kShotNoiseMultiple = 3.0;
constexpr double kPointerTolerance = 1e-5;

fs::path out_dir(const RunConfig& c) {
  fs::path dir(c.out);
  fs::create_directories(dir);
  return dir;
}

void write_stream(const fs::path& path, const auto& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(module_name::kCli, "cannot write " + path.string());
  writer(out);
  if (!out) throw Error(module_name::kCli, "failed writing " + path.string());
}

json check(double value, double tolerance, bool pass) {
  return json{{"value", value}, {"tolerance", tolerance}, {"pass", pass}};
}

json check_at_most(double value, double tolerance) { return check(value, tolerance, value <= tolerance); }

std::string status_of(const json& checks) {
  for (const auto& [name, c] : checks.items()) {
    if (!c.at("pass").get<bool>()) return "FAIL";
  }
  return "PASS";
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

json grid_json(const Grid& g) { return json{{"n", g.n()}, {"x_min", g.x_min()}, {"dx", g.dx()}, {"dp", g.dp()}}; }

void write_phase_space(const fs::path& dir, const std::string& stem, const PhaseSpaceGrid& dist, OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_stream(dir / (stem + ".json"), [&](std::ostream& o) { o << phase_space_to_json(dist) << '\n'; });
    return;
  }
  write_stream(dir / (stem + ".csv"), [&](std::ostream& o) { write_phase_space_csv(dist, o); });
  write_stream(dir / (stem + "_header.json"), [&](std::ostream& o) { o << phase_space_header_json(dist) << '\n'; });
}

void write_characteristic(const fs::path& dir, const CharacteristicGrid& chi, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_stream(dir / "characteristic.csv", [&](std::ostream& o) { write_characteristic_csv(chi, o); });
    return;
  }
  json re = json::array(), im = json::array();
  for (const auto& w : chi.values) {
    re.push_back(w.real());
    im.push_back(w.imag());
  }
  const json j{{"s", chi.s},
               {"u_axis", {{"start", chi.u.start}, {"step", chi.u.step}, {"count", chi.u.count}}},
               {"v_axis", {{"start", chi.v.start}, {"step", chi.v.step}, {"count", chi.v.count}}},
               {"re", re},
               {"im", im}};
  write_json(dir / "characteristic.json", j);
}

json base_report(const char* command, const RunConfig& c) {
  return json{{"command", command}, {"config", json::parse(config_to_json(c))}};
}

Grid device_grid_of(const RunConfig& c, const Grid& system) {
  const CouplingSpec spec{c.g, c.delta_device};
  if (c.device_x_max > 0.0) return make_grid(c.device_n, -c.device_x_max, c.device_x_max);
  return default_device_grid(system, spec, c.device_n);
}

}  // namespace

DistChoice dist_choice_from_string(const std::string& name) {
  if (name == "wigner") return DistChoice::Wigner;
  if (name == "husimi") return DistChoice::Husimi;
  if (name == "characteristic") return DistChoice::Characteristic;
  throw Error(module_name::kCli, "unknown distribution '" + name + "' (expected wigner, husimi or characteristic)");
}

std::string to_string(DistChoice which) {
  switch (which) {
    case DistChoice::Wigner: return "wigner";
    case DistChoice::Husimi: return "husimi";
    case DistChoice::Characteristic: return "characteristic";
  }
  return "";
}

void write_json(const fs::path& path, const json& j) {
  write_stream(path, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
}

bool passed(const json& report) {
  const std::string status = report.value("status", "FAIL");
  return status == "PASS" || status == "SKIPPED";
}

std::string report_file(const std::string& command, const RunConfig&, DistChoice which) {
  if (command == "state") return "state_meta.json";
  if (command == "dist") return to_string(which) + "_summary.json";
  if (command == "sample") return "sample_report.json";
  if (command == "pointer") return "pointer_report.json";
  return "report.json";
}

json cmd_state(const RunConfig& c) {
  const fs::path dir = out_dir(c);
  const WaveFunction psi = in_basis(build_state(c), Basis::Position);
  if (c.format == OutputFormat::Json) {
    write_wavefunction(psi, dir / "state.json");
  } else {
    write_stream(dir / "state.csv", [&](std::ostream& o) { write_wavefunction_csv(psi, o); });
  }
  const double mx = expectation(psi, Observable1D::X);
  const double mp = expectation(psi, Observable1D::P);
  const double vx = expectation(psi, Observable1D::X2) - mx * mx;
  const double vp = expectation(psi, Observable1D::P2) - mp * mp;
  json report = base_report("state", c);
  report["grid"] = grid_json(psi.grid());
  report["norm"] = psi.norm_squared();
  report["mean_x"] = mx;
  report["mean_p"] = mp;
  report["var_x"] = vx;
  report["var_p"] = vp;
  report["checks"] = json{{"norm", check_at_most(std::abs(psi.norm_squared() - 1.0), kNormTolerance)}};
  report["status"] = status_of(report["checks"]);
  write_json(dir / report_file("state", c, DistChoice::Wigner), report);
  return report;
}

json cmd_dist(const RunConfig& c, DistChoice which) {
  const fs::path dir = out_dir(c);
  const WaveFunction psi = in_basis(build_state(c), Basis::Position);
  json report = base_report("dist", c);
  report["distribution"] = to_string(which);
  json checks = json::object();
  if (which == DistChoice::Characteristic) {
    const CharacteristicGrid chi = characteristic(psi, c.s);
    write_characteristic(dir, chi, c.format);
    const cplx origin = chi.at(chi.u.count / 2, chi.v.count / 2);
    report["s"] = c.s;
    report["origin"] = {origin.real(), origin.imag()};
    checks["origin_is_one"] = check_at_most(std::abs(origin - 1.0), kOriginTolerance);
  } else {
    const PhaseSpaceGrid dist = which == DistChoice::Wigner ? wigner(psi) : husimi(psi, c.delta);
    write_phase_space(dir, to_string(which), dist, c.format);
    report["normalization"] = dist.total();
    report["min_value"] = dist.min_value();
    report["max_value"] = dist.max_value();
    checks["normalization"] = check_at_most(std::abs(dist.total() - 1.0), kNormTolerance);
    if (which == DistChoice::Wigner) {
      report["negativity"] = dist.min_value() < 0.0;
      checks["marginal_x"] = check_at_most(linf(marginal(dist, MarginalAxis::OverP), psi.density()), kMarginalTolerance);
      checks["marginal_p"] =
          check_at_most(linf(marginal(dist, MarginalAxis::OverX), to_momentum(psi).density()), kMarginalTolerance);
    } else {
      report["delta"] = c.delta;
      checks["nonnegative"] = check(dist.min_value(), kPositivityFloor, dist.min_value() >= kPositivityFloor);
      checks["marginal_x"] =
          check_at_most(linf(marginal(dist, MarginalAxis::OverP), m_density(psi, c.delta)), kMarginalTolerance);
    }
  }
  report["checks"] = checks;
  report["status"] = status_of(checks);
  write_json(dir / report_file("dist", c, which), report);
  return report;
}

json cmd_sample(const RunConfig& c) {
  const fs::path dir = out_dir(c);
  const WaveFunction psi = in_basis(build_state(c), Basis::Position);
  const SampleResult result = sample_joint(psi, c.delta, c.shots, c.seed, {c.bins[0], c.bins[1]});
  if (c.format == OutputFormat::Json) {
    json records = json::array();
    for (const auto& r : result.records) records.push_back({{"shot", r.shot}, {"x", r.x}, {"p", r.p}});
    write_json(dir / "records.json", records);
  } else {
    write_stream(dir / "records.csv", [&](std::ostream& o) { write_records_csv(result.records, o); });
  }
  write_phase_space(dir, "histogram", result.histogram, c.format);

  json report = base_report("sample", c);
  report["shots"] = c.shots;
  report["seed"] = c.seed;
  report["resampled"] = result.resampled;
  if (c.shots == 0) {
    report["status"] = "SKIPPED";
  } else {
    const auto mass = coarsen_mass(husimi(psi, c.delta), result.histogram.x, result.histogram.p);
    const double tv = total_variation(histogram_mass(result.histogram), mass);
    const double noise = shot_noise_tv(mass, c.shots);
    const double threshold = std::max(kTvThreshold, kShotNoiseMultiple * noise);
    report["tv_distance"] = tv;
    report["shot_noise_scale"] = noise;
    report["checks"] = json{{"tv_distance", check_at_most(tv, threshold)}};
    report["status"] = status_of(report["checks"]);
  }
  write_json(dir / report_file("sample", c, DistChoice::Wigner), report);
  return report;
}

json cmd_pointer(const RunConfig& c) {
  const fs::path dir = out_dir(c);
  const WaveFunction psi = in_basis(build_state(c), Basis::Position);
  const CouplingSpec spec{c.g, c.delta_device};
  const Grid device = device_grid_of(c, psi.grid());
  const auto evolved = apply_interaction(make_composite(device, spec.delta_device, psi), spec.g);
  const PhaseSpaceGrid joint = readout_joint(evolved);
  write_phase_space(dir, "pointer_joint", joint, c.format);
  const PointerComparison cmp = compare_pointer_to_direct(psi, spec, device);
  write_phase_space(dir, "pointer_rescaled", cmp.pointer, c.format);

  json report = base_report("pointer", c);
  report["device_grid"] = grid_json(device);
  report["effective_delta"] = cmp.effective_delta;
  report["deviation"] = cmp.deviation;
  report["checks"] = json{{"pointer_vs_direct", check_at_most(cmp.deviation, kPointerTolerance)}};
  report["status"] = status_of(report["checks"]);
  write_json(dir / report_file("pointer", c, DistChoice::Wigner), report);
  return report;
}

json cmd_report(const RunConfig& c) {
  json sections = json::object();
  sections["state"] = cmd_state(c);
  for (auto which : {DistChoice::Wigner, DistChoice::Husimi, DistChoice::Characteristic}) {
    sections[to_string(which)] = cmd_dist(c, which);
  }
  sections["sample"] = cmd_sample(c);
  sections["pointer"] = cmd_pointer(c);
  json summary = json::object();
  bool ok = true;
  for (auto& [name, section] : sections.items()) {
    summary[name] = section.at("status");
    ok = ok && passed(section);
  }
  json report = base_report("report", c);
  report["sections"] = summary;
  report["status"] = ok ? "PASS" : "FAIL";
  write_json(fs::path(c.out) / "report.json", report);
  return report;
}

}  // namespace phasespace::cli
