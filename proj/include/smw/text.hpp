#pragma once
// Canonical text form for polynomials: terms sorted descending by the
// active monomial order, coefficients as "num" or "num/den", generators by
// name with "^" exponents, e.g. "3/16*kH2^2 - 1/2*kH3". This is the
// round-trip serialization used by the JSON schemas and the CLI.

#include "smw/order.hpp"
#include "smw/polynomial.hpp"

#include <string>
#include <string_view>

namespace smw {

std::string to_text(const Polynomial& p, const MonomialOrder& order);

/// Uses the default grevlex order of the polynomial's generator set.
std::string to_text(const Polynomial& p);

/// Inverse of to_text (tolerant about whitespace). Unknown generator names
/// and malformed syntax raise Error.
Polynomial parse_polynomial(std::string_view text, GenSetPtr gs);

}  // namespace smw
