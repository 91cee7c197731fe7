#pragma once

#include <stdexcept>
#include <string>

namespace quartres {

// Bad arguments from a caller: malformed polynomial, violated precondition.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reducible polynomial handed to something that needs a field.
struct NotAField : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A search or heuristic hit its configured ceiling. Partial results are not
// usable for completeness claims.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold did not; a bug somewhere upstream.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace quartres
