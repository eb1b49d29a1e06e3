#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cheb {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition does not hold (sampling condition, kind mismatch,
// invalid arguments).
struct precondition_error : error {
    using error::error;
};

// The requested contour leaves the function's region of analyticity.
struct analyticity_error : error {
    using error::error;
};

// A function evaluation produced a non-finite value or hit a singularity.
struct evaluation_error : error {
    using error::error;
};

// Unknown registry name or invalid registry parameters.
struct registry_error : error {
    using error::error;
};

// The function has no exact-coefficient oracle.
struct no_oracle_error : error {
    using error::error;
};

// Expression parsing failed; offset is the byte position in the source text.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t offset_)
        : error(what), offset(offset_) {}
    std::size_t offset;
};

// Eigenvalue iteration failed to deflate; index is the stuck eigenvalue slot.
struct convergence_error : error {
    convergence_error(const std::string& what, int index_)
        : error(what), index(index_) {}
    int index;
};

} // namespace cheb
