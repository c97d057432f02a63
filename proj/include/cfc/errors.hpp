#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands have incompatible sizes (vector lengths, code dimensions).
struct dimension_error : error {
    using error::error;
};

// A parameter is outside the domain an operation is defined on.
struct domain_error : error {
    using error::error;
};

// Malformed textual input; message carries line/column diagnostics.
struct parse_error : error {
    using error::error;
};

// The requested computation exceeds the configured work budget.
struct budget_error : error {
    using error::error;
};

}  // namespace cfc
