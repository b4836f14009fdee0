#pragma once

#include <stdexcept>
#include <string>

namespace gbgg {

/// Arithmetic attempted between scalars of different kinds (rational vs
/// prime field) or different characteristics.
struct ScalarMismatchError : std::invalid_argument {
    explicit ScalarMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Shape or degree mismatch between operands.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input text (algebra files, bivector expressions, basis files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed object failed its post-construction verification (for example a
/// witness whose required image does not vanish on the given algebra).
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural guarantee failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gbgg
