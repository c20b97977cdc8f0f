#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "phasespace/error.hpp"
#include "phasespace/parallel.hpp"
#include "run_config.hpp"

namespace {

using namespace phasespace;
using namespace phasespace::cli;
namespace fs = std::filesystem;

struct FlagField {
  const char* flag;
  std::function<bool(const RunConfig&, const RunConfig&)> same;
};

const std::vector<FlagField>& flag_fields() {
  static const std::vector<FlagField> fields = {
      {"--grid-n", [](const RunConfig& a, const RunConfig& b) { return a.grid_n == b.grid_n; }},
      {"--x-min", [](const RunConfig& a, const RunConfig& b) { return a.x_min == b.x_min; }},
      {"--x-max", [](const RunConfig& a, const RunConfig& b) { return a.x_max == b.x_max; }},
      {"--state", [](const RunConfig& a, const RunConfig& b) { return a.state == b.state; }},
      {"--delta", [](const RunConfig& a, const RunConfig& b) { return a.delta == b.delta; }},
      {"--g", [](const RunConfig& a, const RunConfig& b) { return a.g == b.g; }},
      {"--delta-device", [](const RunConfig& a, const RunConfig& b) { return a.delta_device == b.delta_device; }},
      {"--shots", [](const RunConfig& a, const RunConfig& b) { return a.shots == b.shots; }},
      {"--seed", [](const RunConfig& a, const RunConfig& b) { return a.seed == b.seed; }},
      {"--bins", [](const RunConfig& a, const RunConfig& b) { return a.bins == b.bins; }},
      {"--out", [](const RunConfig& a, const RunConfig& b) { return a.out == b.out; }},
      {"--format", [](const RunConfig& a, const RunConfig& b) { return a.format == b.format; }},
      {"--s", [](const RunConfig& a, const RunConfig& b) { return a.s == b.s; }},
      {"--device-n", [](const RunConfig& a, const RunConfig& b) { return a.device_n == b.device_n; }},
      {"--device-x-max", [](const RunConfig& a, const RunConfig& b) { return a.device_x_max == b.device_x_max; }},
  };
  return fields;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(module_name::kCli, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_error_report(const std::string& command, const RunConfig& config, DistChoice which,
                        const std::string& message) {
  try {
    fs::create_directories(config.out);
    nlohmann::json report{{"command", command}, {"status", "ERROR"}, {"error", message}};
    write_json(fs::path(config.out) / report_file(command, config, which), report);
  } catch (const std::exception&) {
    // The output directory itself may be the problem; the message already went to stderr.
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-space distributions and successive measurement of discretized pure states"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string format_name = "csv";
  std::vector<std::size_t> bins{32, 32};
  std::string config_path;
  app.add_option("--grid-n", flags.grid_n, "Lattice points (power of two)")->capture_default_str();
  app.add_option("--x-min", flags.x_min, "Lower end of the position domain")->capture_default_str();
  app.add_option("--x-max", flags.x_max, "Upper end of the position domain")->capture_default_str();
  app.add_option("--state", flags.state,
                 "vacuum | coherent x0 p0 delta | fock m | cat x0 delta | path to a state file")
      ->capture_default_str();
  app.add_option("--delta", flags.delta, "Measurement / Husimi window width")->capture_default_str();
  app.add_option("--g", flags.g, "Pointer coupling strength")->capture_default_str();
  app.add_option("--delta-device", flags.delta_device, "Width of the pointer's initial Gaussian")
      ->capture_default_str();
  app.add_option("--shots", flags.shots, "Monte Carlo shots")->capture_default_str();
  app.add_option("--seed", flags.seed, "Random seed")->capture_default_str();
  app.add_option("--bins", bins, "Histogram bins: one value or an x p pair")->expected(1, 2);
  app.add_option("--out", flags.out, "Output directory")->capture_default_str();
  app.add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--s", flags.s, "Ordering parameter of the characteristic function")->capture_default_str();
  app.add_option("--device-n", flags.device_n, "Pointer lattice points")->capture_default_str();
  app.add_option("--device-x-max", flags.device_x_max, "Pointer half-domain (0 = automatic)")->capture_default_str();
  app.add_option("--config", config_path, "JSON run configuration; its values win over flags");

  std::string dist_name;
  app.add_subcommand("state", "Build a state and write it with its moments");
  auto* dist = app.add_subcommand("dist", "Compute a phase-space distribution");
  dist->add_option("which", dist_name, "wigner | husimi | characteristic")
      ->required()
      ->check(CLI::IsMember({"wigner", "husimi", "characteristic"}));
  app.add_subcommand("sample", "Sample the position-then-momentum measurement");
  app.add_subcommand("pointer", "Run the pointer model and compare with the direct density");
  app.add_subcommand("report", "Run every command and aggregate the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  DistChoice which = DistChoice::Wigner;
  RunConfig config = flags;
  try {
    configure_threads_from_env();
    flags.format = output_format_from_string(format_name);
    flags.bins = {bins.at(0), bins.size() > 1 ? bins[1] : bins[0]};
    config = flags;
    if (!config_path.empty()) {
      config = config_from_json(read_file(config_path), flags);
      for (const auto& field : flag_fields()) {
        if (app.count(field.flag) > 0 && !field.same(flags, config)) {
          std::cerr << "warning: " << field.flag << " overridden by " << config_path << '\n';
        }
      }
    }
    if (command == "dist") which = dist_choice_from_string(dist_name);
    validate(config);
    fs::create_directories(config.out);
    {
      std::ofstream out(fs::path(config.out) / "config.json", std::ios::binary);
      out << config_to_json(config) << '\n';
    }

    nlohmann::json report;
    if (command == "state") {
      report = cmd_state(config);
    } else if (command == "dist") {
      report = cmd_dist(config, which);
    } else if (command == "sample") {
      report = cmd_sample(config);
    } else if (command == "pointer") {
      report = cmd_pointer(config);
    } else {
      report = cmd_report(config);
    }
    std::cout << command << ": " << report.at("status").get<std::string>() << '\n';
    return passed(report) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    write_error_report(command, config, which, e.what());
    return 2;
  }
}
