#pragma once

#include <stdexcept>
#include <string>

namespace mfq {

// Bad arguments: mismatched moduli, malformed specs, values out of range.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Matrix inversion requested for a non-unit determinant.
struct singular_error : std::domain_error {
    explicit singular_error(const std::string& what) : std::domain_error(what) {}
};

// A search or closure hit its element budget. Signals "gave up", never a math fact.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Operation not available for this input (family not constructible, group not enumerated, ...).
struct unsupported : std::runtime_error {
    explicit unsupported(const std::string& what) : std::runtime_error(what) {}
};

// Riemann-Hurwitz data does not describe a surface kernel.
struct not_surface_kernel : std::domain_error {
    explicit not_surface_kernel(const std::string& what) : std::domain_error(what) {}
};

// An invariant that should hold by construction failed; always a bug.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

// Catalog file failed schema or cross-validation.
struct load_error : std::runtime_error {
    explicit load_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mfq
