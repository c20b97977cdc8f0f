#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "phasespace/grid.hpp"
#include "phasespace/wavefunction.hpp"

namespace phasespace::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::size_t grid_n = 256;
  double x_min = -16.0;
  double x_max = 16.0;
  std::string state = "vacuum";
  double delta = 1.0;
  double g = 1.0;
  double delta_device = 1.0;
  std::int64_t shots = 0;
  std::uint64_t seed = 42;
  std::array<std::size_t, 2> bins{32, 32};
  std::string out = "out";
  OutputFormat format = OutputFormat::Csv;
  double s = 0.0;                  // characteristic-function ordering parameter
  std::size_t device_n = 512;
  double device_x_max = 0.0;       // 0 = size the device lattice from g and delta_device

  bool operator==(const RunConfig&) const = default;
};

std::string to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& name);

std::string config_to_json(const RunConfig& config);
/// Keys absent from the text keep the values already in `base`.
RunConfig config_from_json(const std::string& text, RunConfig base = {});

/// Range checks and file existence; throws Error labelled "cli".
void validate(const RunConfig& config);

Grid grid_of(const RunConfig& config);

/// "vacuum", "coherent x0 p0 delta", "fock m", "cat x0 delta", or a path to a
/// serialized wavefunction (.json or .csv).
bool is_constructor_spec(const std::string& spec);
WaveFunction build_state(const RunConfig& config);

}  // namespace phasespace::cli
