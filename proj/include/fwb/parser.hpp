#pragma once

#include <string_view>
#include <vector>

#include "fwb/polynomial.hpp"

namespace fwb {

/// Parses the ASCII polynomial grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | var | var '^' int | '(' expr ')' ('^' int)?
/// Whitespace is insignificant; integer literals are reduced mod p. A leading
/// sign on the first term is also accepted.
/// Errors: Error(kParse) with the 0-based character position in the message.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated list of polynomials; an empty or all-blank string gives an
/// empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace fwb
