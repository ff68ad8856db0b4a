#ifndef IDEALS_PARSE_HPP
#define IDEALS_PARSE_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ideals/groebner.hpp"
#include "ideals/monomial_ideal.hpp"
#include "ideals/polynomial.hpp"

namespace ideals {

// Ideal text format, shared between the library and the CLI.
//
//   ideal      := "0" | generator ("," generator)*
//   generator  := polynomial
//   polynomial := ["+"|"-"] term (("+"|"-") term)*
//   term       := element ("*" element)*
//   element    := coefficient | variable ("^" natural)?
//   coefficient:= natural ("/" natural)?
//   variable   := "x" | "y" | "z" (aliases for x1, x2, x3) | "x" natural
//
// Whitespace-insensitive. A generator consisting of a single coefficient-free
// product of variable powers (or the literal "1") is monomial text; an ideal
// all of whose generators are monomial parses as a MonomialIdeal.

using ParsedIdeal = std::variant<MonomialIdeal, PolynomialIdeal>;

/// Dimension is inferred from the highest variable index and raised to
/// min_dim when positive. Throws ParseError when no variable occurs and no
/// hint is given.
ParsedIdeal parse_ideal(std::string_view text, int min_dim = 0);

/// As parse_ideal but requires monomial text.
MonomialIdeal parse_monomial_ideal(std::string_view text, int min_dim = 0);

/// As parse_ideal but always yields a polynomial ideal.
PolynomialIdeal parse_polynomial_ideal(std::string_view text, int min_dim = 0);

/// One ideal per non-empty line (line k is a_k); '#' starts a comment.
/// All lines are unified to a common ambient dimension.
std::vector<MonomialIdeal> parse_ideal_table(std::istream& in);

// Canonical renderings; variables are always emitted as x1..xn.
std::string to_string(const Exponent& monomial);
std::string to_string(const MonomialIdeal& ideal);
std::string to_string(const Polynomial& f);
std::string to_string(const PolynomialIdeal& ideal);

}  // namespace ideals

#endif
