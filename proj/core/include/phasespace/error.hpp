#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phasespace {

/// Raised on any violated precondition. `module()` names the component that
/// rejected the input ("qgrid-core", "phasespace", "measurement",
/// "pointer-model", "cli") so front ends can label the failure.
class Error : public std::runtime_error {
 public:
  Error(std::string_view module, const std::string& message);

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

namespace module_name {
inline constexpr std::string_view kCore = "qgrid-core";
inline constexpr std::string_view kPhaseSpace = "phasespace";
inline constexpr std::string_view kMeasurement = "measurement";
inline constexpr std::string_view kPointer = "pointer-model";
inline constexpr std::string_view kCli = "cli";
}  // namespace module_name

}  // namespace phasespace
