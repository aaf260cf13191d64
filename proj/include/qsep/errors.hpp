#pragma once

#include <stdexcept>
#include <string>

namespace qsep {

/// Raised on malformed state expressions. `position` is the byte offset
/// into the input where the problem was detected (input length for
/// whole-expression problems such as a vanishing amplitude vector).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error("parse error at offset " + std::to_string(position) +
                             ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Raised for well-formed states the measure does not cover
/// (heterogeneous local dimensions, fewer than two sites).
class UnsupportedStateError : public std::invalid_argument {
public:
    explicit UnsupportedStateError(const std::string& message)
        : std::invalid_argument(message) {}
};

/// Raised when a numeric quantity degenerates in a way the formulas do
/// not define, e.g. a vanishing calibration denominator on a
/// non-factorable site.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& message)
        : std::runtime_error(message) {}
};

}  // namespace qsep
