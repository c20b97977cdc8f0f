#include "phasespace/error.hpp"

namespace phasespace {

Error::Error(std::string_view module, const std::string& message)
    : std::runtime_error("[" + std::string(module) + "] " + message), module_(module) {}

}  // namespace phasespace
