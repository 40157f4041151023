#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dedekind {

/// A fraction with zero denominator, or unparseable rational text.
struct invalid_rational : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operand violates the no-greatest-element / no-least-element cut condition.
struct not_a_cut : std::domain_error {
    using std::domain_error::domain_error;
};

/// Multiplier outside the admissible nonnegative range.
struct invalid_multiplier : std::domain_error {
    using std::domain_error::domain_error;
};

/// Mismatched grids or vector dimensions between two operands.
struct domain_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in expression or CSV input; `position` is a character
/// offset for expressions and a 1-based line number for CSV.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

} // namespace dedekind
