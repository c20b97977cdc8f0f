#include "phasespace/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phasespace/error.hpp"

namespace phasespace {
namespace {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(module_name::kCore, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(module_name::kCore, "cannot write " + path.string());
  out << text;
}

json wavefunction_header(const WaveFunction& psi) {
  const Grid& g = psi.grid();
  return json{{"n", g.n()}, {"x_min", g.x_min()}, {"dx", g.dx()}, {"basis", std::string(to_string(psi.basis()))}};
}

Grid grid_from_header(const json& j) {
  return make_grid_with_spacing(j.at("n").get<std::size_t>(), j.at("x_min").get<double>(), j.at("dx").get<double>());
}

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::uint64_t r = 0;
    for (int b = 0; b < 8; ++b) r |= ((v >> (8 * b)) & 0xffU) << (8 * (7 - b));
    return r;
  }
}

json axis_json(const Axis& a) { return json{{"start", a.start}, {"step", a.step}, {"count", a.count}}; }

Axis axis_from_json(const json& j) {
  return Axis{j.at("start").get<double>(), j.at("step").get<double>(), j.at("count").get<std::size_t>()};
}

json phase_space_header(const PhaseSpaceGrid& d) {
  return json{{"n", d.x.count},
              {"x_min", d.x.start},
              {"dx", d.x.step},
              {"kind", std::string(to_string(d.kind))},
              {"delta", d.delta},
              {"x_axis", axis_json(d.x)},
              {"p_axis", axis_json(d.p)},
              {"x_label", d.x_label},
              {"p_label", d.p_label}};
}

PhaseSpaceGrid phase_space_skeleton(const json& h) {
  PhaseSpaceGrid d;
  d.x = axis_from_json(h.at("x_axis"));
  d.p = axis_from_json(h.at("p_axis"));
  d.kind = dist_kind_from_string(h.at("kind").get<std::string>());
  d.delta = h.at("delta").get<double>();
  d.x_label = h.value("x_label", std::string("x"));
  d.p_label = h.value("p_label", std::string("p"));
  return d;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string wavefunction_to_json(const WaveFunction& psi) {
  json j = wavefunction_header(psi);
  json amp = json::array();
  for (const auto& a : psi.amp()) {
    amp.push_back(a.real());
    amp.push_back(a.imag());
  }
  j["amp"] = std::move(amp);
  return j.dump(2);
}

namespace {

WaveFunction wavefunction_from_parsed(const json& j, const std::filesystem::path& base) {
  const Grid grid = grid_from_header(j);
  const Basis basis = basis_from_string(j.at("basis").get<std::string>());
  std::vector<cplx> amp(grid.n());
  if (j.contains("amp")) {
    const auto& raw = j.at("amp");
    if (raw.size() != 2 * grid.n()) throw Error(module_name::kCore, "amp array must hold 2n reals");
    for (std::size_t k = 0; k < grid.n(); ++k) amp[k] = {raw[2 * k].get<double>(), raw[2 * k + 1].get<double>()};
  } else if (j.contains("data")) {
    const std::string bytes = read_text(base / j.at("data").get<std::string>());
    if (bytes.size() != 16 * grid.n()) throw Error(module_name::kCore, "binary sidecar must hold 2n float64 values");
    for (std::size_t k = 0; k < 2 * grid.n(); ++k) {
      std::uint64_t raw = 0;
      std::memcpy(&raw, bytes.data() + 8 * k, 8);
      const double v = std::bit_cast<double>(to_little_endian(raw));
      if (k % 2 == 0) {
        amp[k / 2].real(v);
      } else {
        amp[k / 2].imag(v);
      }
    }
  } else {
    throw Error(module_name::kCore, "wavefunction file has neither 'amp' nor 'data'");
  }
  return WaveFunction(grid, basis, std::move(amp));
}

}  // namespace

WaveFunction wavefunction_from_json(const std::string& text) {
  try {
    return wavefunction_from_parsed(json::parse(text), std::filesystem::current_path());
  } catch (const json::exception& e) {
    throw Error(module_name::kCore, std::string("malformed wavefunction JSON: ") + e.what());
  }
}

void write_wavefunction(const WaveFunction& psi, const std::filesystem::path& json_path) {
  write_text(json_path, wavefunction_to_json(psi) + "\n");
}

void write_wavefunction_binary(const WaveFunction& psi, const std::filesystem::path& json_path,
                               const std::filesystem::path& sidecar_path) {
  json j = wavefunction_header(psi);
  j["data"] = sidecar_path.filename().string();
  write_text(json_path, j.dump(2) + "\n");
  std::string bytes(16 * psi.size(), '\0');
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const std::uint64_t re = to_little_endian(std::bit_cast<std::uint64_t>(psi[k].real()));
    const std::uint64_t im = to_little_endian(std::bit_cast<std::uint64_t>(psi[k].imag()));
    std::memcpy(bytes.data() + 16 * k, &re, 8);
    std::memcpy(bytes.data() + 16 * k + 8, &im, 8);
  }
  write_text(sidecar_path, bytes);
}

WaveFunction read_wavefunction(const std::filesystem::path& json_path) {
  try {
    return wavefunction_from_parsed(json::parse(read_text(json_path)), json_path.parent_path());
  } catch (const json::exception& e) {
    throw Error(module_name::kCore, "malformed wavefunction file " + json_path.string() + ": " + e.what());
  }
}

void write_wavefunction_csv(const WaveFunction& psi, std::ostream& out) {
  const bool position = psi.basis() == Basis::Position;
  out << (position ? "x" : "p") << ",re,im\n";
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double c = position ? psi.grid().x(k) : psi.grid().p(k);
    out << format_real(c) << ',' << format_real(psi[k].real()) << ',' << format_real(psi[k].imag()) << '\n';
  }
}

WaveFunction read_wavefunction_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(module_name::kCore, "empty wavefunction CSV");
  if (line.rfind("x,", 0) != 0) throw Error(module_name::kCore, "wavefunction CSV must be in the position basis (x,re,im)");
  std::vector<double> xs;
  std::vector<cplx> amp;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x = 0, re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) != 3) {
      throw Error(module_name::kCore, "malformed wavefunction CSV row: " + line);
    }
    xs.push_back(x);
    amp.emplace_back(re, im);
  }
  if (xs.size() < 2) throw Error(module_name::kCore, "wavefunction CSV needs at least two rows");
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  return WaveFunction(make_grid_with_spacing(xs.size(), xs.front(), dx), Basis::Position, std::move(amp));
}

std::string phase_space_header_json(const PhaseSpaceGrid& dist) { return phase_space_header(dist).dump(2); }

void write_phase_space_csv(const PhaseSpaceGrid& dist, std::ostream& out) {
  out << dist.x_label << ',' << dist.p_label << ",value\n";
  for (std::size_t i = 0; i < dist.x.count; ++i) {
    const std::string x = format_real(dist.x.at(i));
    for (std::size_t j = 0; j < dist.p.count; ++j) {
      out << x << ',' << format_real(dist.p.at(j)) << ',' << format_real(dist.at(i, j)) << '\n';
    }
  }
}

std::string phase_space_to_json(const PhaseSpaceGrid& dist) {
  json j = phase_space_header(dist);
  j["values"] = dist.values;
  return j.dump();
}

PhaseSpaceGrid phase_space_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    PhaseSpaceGrid d = phase_space_skeleton(j);
    d.values = j.at("values").get<std::vector<double>>();
    if (d.values.size() != d.x.count * d.p.count) throw Error(module_name::kPhaseSpace, "value count mismatch");
    return d;
  } catch (const json::exception& e) {
    throw Error(module_name::kPhaseSpace, std::string("malformed phase-space JSON: ") + e.what());
  }
}

PhaseSpaceGrid read_phase_space_csv(const std::string& header_json, std::istream& csv) {
  PhaseSpaceGrid d;
  try {
    d = phase_space_skeleton(json::parse(header_json));
  } catch (const json::exception& e) {
    throw Error(module_name::kPhaseSpace, std::string("malformed phase-space header: ") + e.what());
  }
  std::string line;
  std::getline(csv, line);
  d.values.reserve(d.x.count * d.p.count);
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    double x = 0, p = 0, v = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &p, &v) != 3) {
      throw Error(module_name::kPhaseSpace, "malformed phase-space CSV row: " + line);
    }
    d.values.push_back(v);
  }
  if (d.values.size() != d.x.count * d.p.count) throw Error(module_name::kPhaseSpace, "CSV row count mismatch");
  return d;
}

void write_characteristic_csv(const CharacteristicGrid& chi, std::ostream& out) {
  out << "u,v,re,im\n";
  for (std::size_t i = 0; i < chi.u.count; ++i) {
    const std::string u = format_real(chi.u.at(i));
    for (std::size_t j = 0; j < chi.v.count; ++j) {
      const cplx& w = chi.at(i, j);
      out << u << ',' << format_real(chi.v.at(j)) << ',' << format_real(w.real()) << ',' << format_real(w.imag())
          << '\n';
    }
  }
}

void write_records_csv(const std::vector<SampleRecord>& records, std::ostream& out) {
  out << "shot,x,p\n";
  for (const auto& r : records) out << r.shot << ',' << format_real(r.x) << ',' << format_real(r.p) << '\n';
}

}  // namespace phasespace
