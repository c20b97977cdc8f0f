#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "phasespace/error.hpp"
#include "phasespace/serialize.hpp"
#include "phasespace/states.hpp"

namespace phasespace::cli {
namespace {

using json = nlohmann::json;

Error cli_error(const std::string& msg) { return Error(module_name::kCli, msg); }

std::vector<std::string> words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

double number(const std::string& word, const std::string& spec) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size()) throw cli_error("bad number '" + word + "' in state spec '" + spec + "'");
  return v;
}

void expect_arity(const std::vector<std::string>& w, std::size_t n, const std::string& spec, const char* usage) {
  if (w.size() != n) throw cli_error("state spec '" + spec + "' must read '" + usage + "'");
}

}  // namespace

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw cli_error("unknown output format '" + name + "' (expected csv or json)");
}

std::string config_to_json(const RunConfig& c) {
  json j{{"grid_n", c.grid_n},
         {"x_min", c.x_min},
         {"x_max", c.x_max},
         {"state", c.state},
         {"delta", c.delta},
         {"g", c.g},
         {"delta_device", c.delta_device},
         {"shots", c.shots},
         {"seed", c.seed},
         {"bins", {c.bins[0], c.bins[1]}},
         {"out", c.out},
         {"format", to_string(c.format)},
         {"s", c.s},
         {"device_n", c.device_n},
         {"device_x_max", c.device_x_max}};
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text, RunConfig c) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw cli_error("config must be a JSON object");
    static const std::vector<std::string> known = {"grid_n", "x_min", "x_max", "state", "delta",
                                                   "g", "delta_device", "shots", "seed", "bins",
                                                   "out", "format", "s", "device_n", "device_x_max"};
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) throw cli_error("unknown config key '" + key + "'");
    }
    c.grid_n = j.value("grid_n", c.grid_n);
    c.x_min = j.value("x_min", c.x_min);
    c.x_max = j.value("x_max", c.x_max);
    c.state = j.value("state", c.state);
    c.delta = j.value("delta", c.delta);
    c.g = j.value("g", c.g);
    c.delta_device = j.value("delta_device", c.delta_device);
    c.shots = j.value("shots", c.shots);
    c.seed = j.value("seed", c.seed);
    if (j.contains("bins")) {
      const auto& b = j.at("bins");
      if (b.is_number()) {
        c.bins = {b.get<std::size_t>(), b.get<std::size_t>()};
      } else {
        if (b.size() != 2) throw cli_error("config 'bins' must be a number or a pair");
        c.bins = {b[0].get<std::size_t>(), b[1].get<std::size_t>()};
      }
    }
    c.out = j.value("out", c.out);
    if (j.contains("format")) c.format = output_format_from_string(j.at("format").get<std::string>());
    c.s = j.value("s", c.s);
    c.device_n = j.value("device_n", c.device_n);
    c.device_x_max = j.value("device_x_max", c.device_x_max);
  } catch (const json::exception& e) {
    throw cli_error(std::string("malformed config: ") + e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  if (!is_power_of_two(c.grid_n)) throw cli_error("--grid-n must be a power of two");
  if (!(c.x_max > c.x_min)) throw cli_error("--x-max must exceed --x-min");
  if (!(c.delta > 0.0)) throw cli_error("--delta must be positive");
  if (!(c.g > 0.0)) throw cli_error("--g must be positive");
  if (!(c.delta_device > 0.0)) throw cli_error("--delta-device must be positive");
  if (c.shots < 0) throw cli_error("--shots must be non-negative");
  if (c.bins[0] == 0 || c.bins[1] == 0) throw cli_error("--bins must be positive");
  if (c.s < -1.0 || c.s > 1.0) throw cli_error("--s must lie in [-1, 1]");
  if (!is_power_of_two(c.device_n)) throw cli_error("--device-n must be a power of two");
  if (c.device_x_max < 0.0) throw cli_error("--device-x-max must be non-negative");
  if (c.out.empty()) throw cli_error("--out must not be empty");
  if (!is_constructor_spec(c.state) && !std::filesystem::exists(c.state)) {
    throw cli_error("state file '" + c.state + "' does not exist");
  }
}

Grid grid_of(const RunConfig& c) { return make_grid(c.grid_n, c.x_min, c.x_max); }

bool is_constructor_spec(const std::string& spec) {
  const auto w = words(spec);
  if (w.empty()) return false;
  return w[0] == "vacuum" || w[0] == "coherent" || w[0] == "fock" || w[0] == "cat";
}

WaveFunction build_state(const RunConfig& c) {
  const Grid grid = grid_of(c);
  const std::string& spec = c.state;
  if (!is_constructor_spec(spec)) {
    const std::filesystem::path path(spec);
    if (path.extension() == ".csv") {
      std::ifstream in(path);
      if (!in) throw cli_error("cannot open state file " + spec);
      return read_wavefunction_csv(in);
    }
    return read_wavefunction(path);
  }
  const auto w = words(spec);
  if (w[0] == "vacuum") {
    expect_arity(w, 1, spec, "vacuum");
    return vacuum(grid);
  }
  if (w[0] == "coherent") {
    expect_arity(w, 4, spec, "coherent x0 p0 delta");
    return coherent_state(grid, number(w[1], spec), number(w[2], spec), number(w[3], spec));
  }
  if (w[0] == "fock") {
    expect_arity(w, 2, spec, "fock m");
    const double m = number(w[1], spec);
    if (m < 0 || m != std::floor(m)) throw cli_error("fock index must be a non-negative integer");
    return fock_state(grid, static_cast<std::size_t>(m));
  }
  expect_arity(w, 3, spec, "cat x0 delta");
  return cat_state(grid, number(w[1], spec), number(w[2], spec));
}

}  // namespace phasespace::cli
