#pragma once

#include <stdexcept>
#include <string>

namespace pkroots {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data failed validation (bad spec file, non-triangular generator, ...).
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// The requested operation is not defined in this configuration
// (e.g. exp/log in small characteristic, infinite class space).
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

// A caller violated a documented precondition.
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// An internal invariant was breached; never silent.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace pkroots
