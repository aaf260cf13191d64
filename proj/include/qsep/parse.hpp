#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/state.hpp"

namespace qsep {

/// Warning code recorded when the input had to be rescaled to unit norm.
inline constexpr const char* kWarnNormalizedInput = "normalized-input";

struct ParseResult {
    PureState state;
    std::vector<std::string> warnings;
};

/// Parses a Dirac-notation state expression, e.g.
///
///     1/2|00> + sqrt(3)/2|11>
///     1/sqrt(2)|01> - i/sqrt(2)|10>
///
/// Grammar (whitespace ignored between tokens):
///
///     state  = [ "+" | "-" ] term { ("+" | "-") term } ;
///     term   = [ coeff [ "*" ] ] ket ;
///     ket    = "|" digit { digit } ">" ;
///     coeff  = factor { ("*" | "/") factor } ;
///     factor = integer | "sqrt(" integer ")" | "i"
///            | "(" coeff { ("+"|"-") coeff } ")" ;
///
/// The optional leading sign is accepted beyond the published grammar so
/// that rendered states reparse. Coefficients are evaluated to double
/// precision. All kets must have the same length N. When `dim` is given
/// every digit must be < dim; otherwise the local dimension is
/// max(largest digit + 1, 2), uniform across sites. Terms naming the
/// same ket are combined. The result is normalized; if the input norm
/// was off by more than 1e-9 a kWarnNormalizedInput warning is recorded.
///
/// Throws ParseError on syntax errors, inconsistent ket lengths, digits
/// >= dim, division by zero, or a zero vector after combining terms.
ParseResult parse_state(std::string_view expr, std::optional<int> dim = std::nullopt);

/// Renders a state back into the expression grammar. Coefficients are
/// emitted as small rationals or integer square roots when those match
/// to ~1e-13, otherwise as high-precision fractions; reparsing the
/// result reproduces every amplitude to 1e-12 or better. Requires every
/// local dimension <= 10 (single-character ket digits).
std::string render_state(const PureState& state);

}  // namespace qsep
