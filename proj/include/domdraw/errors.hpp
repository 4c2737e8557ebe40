#pragma once

#include <stdexcept>
#include <string>

namespace domdraw {

// Raised when a search would exceed a configured width or enumeration
// budget.  Distinct from std::invalid_argument so callers can map it to a
// dedicated exit code.
class bound_error : public std::runtime_error {
public:
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domdraw
