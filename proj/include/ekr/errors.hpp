#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

// Precondition broken by the caller (wrong set sizes, non-apex split, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Parameter outside the mathematical domain of the operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rank or index outside the representable range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Instance exceeds a configured enumeration / search / solver budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ekr
