#pragma once

#include <stdexcept>
#include <string>

namespace superbracket {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different fields, or a field spec is malformed.
struct FieldError : Error {
    using Error::Error;
};

// Shapes of matrices / tensors do not fit together.
struct DimensionError : Error {
    using Error::Error;
};

// Axiom mode does not match the characteristic of the field.
struct ModeError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

} // namespace superbracket
