#pragma once

#include <stdexcept>
#include <string>

namespace dsieve {

// Thrown when an exhaustive enumeration would exceed its hard size limit.
// Limits are errors, never silent truncation.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dsieve
