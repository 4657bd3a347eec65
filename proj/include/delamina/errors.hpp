// errors.hpp
// Error hierarchy: invalid input, under-resolved scales, out-of-regime parameters.

#ifndef DELAMINA_ERRORS_HPP
#define DELAMINA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace delamina {

struct InvalidArgument : std::runtime_error {
    explicit InvalidArgument(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested length scale cannot be represented on the grid.
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameters outside the validity window of a construction.
struct RegimeError : std::runtime_error {
    explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace delamina

#endif
