#pragma once

#include <stdexcept>
#include <string>

namespace cgl {

// Bad user input: invalid indices, malformed family specs, out-of-range
// parameters. CLI maps this to exit code 2.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured work cap. CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cgl
