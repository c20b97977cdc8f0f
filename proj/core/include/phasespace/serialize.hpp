#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "phasespace/distributions.hpp"
#include "phasespace/sampler.hpp"
#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// Decimal rendering with 17 significant digits.
std::string format_real(double value);

// WaveFunction: JSON {"n", "x_min", "dx", "basis", "amp": [re0, im0, re1, ...]}.
// With a binary sidecar the JSON carries "data": "<file>" instead of "amp" and
// the sidecar holds 2n little-endian float64 values.
std::string wavefunction_to_json(const WaveFunction& psi);
WaveFunction wavefunction_from_json(const std::string& text);
void write_wavefunction(const WaveFunction& psi, const std::filesystem::path& json_path);
void write_wavefunction_binary(const WaveFunction& psi, const std::filesystem::path& json_path,
                               const std::filesystem::path& sidecar_path);
WaveFunction read_wavefunction(const std::filesystem::path& json_path);

/// CSV with columns x,re,im (position basis) or p,re,im (momentum basis).
void write_wavefunction_csv(const WaveFunction& psi, std::ostream& out);
WaveFunction read_wavefunction_csv(std::istream& in);

// PhaseSpaceGrid: JSON header {n, x_min, dx, kind, delta, ...} and CSV triples
// x,p,value row-major in x (column names follow the grid's axis labels).
std::string phase_space_header_json(const PhaseSpaceGrid& dist);
void write_phase_space_csv(const PhaseSpaceGrid& dist, std::ostream& out);
std::string phase_space_to_json(const PhaseSpaceGrid& dist);
PhaseSpaceGrid phase_space_from_json(const std::string& text);
/// Reads back a CSV triple file using its JSON header for the axes.
PhaseSpaceGrid read_phase_space_csv(const std::string& header_json, std::istream& csv);

void write_characteristic_csv(const CharacteristicGrid& chi, std::ostream& out);

/// CSV columns shot,x,p.
void write_records_csv(const std::vector<SampleRecord>& records, std::ostream& out);

}  // namespace phasespace
