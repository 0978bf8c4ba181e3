/*! \file poly_io.hpp
  \brief Canonical polynomial printing and the polynomial text grammar

  Grammar:
    poly   := term ('+' term)* | '0'
    term   := factor ('*' factor)*
    factor := '1' | ident ('^' uint)?
  Whitespace is insignificant; identifiers are [A-Za-z_][A-Za-z0-9_]*.
  Printing is canonical: terms descending under the given order, variables
  inside a term in roster order, exponents written only when above 1.
*/

#pragma once

#include "polynomial.hpp"
#include "variable_table.hpp"

#include <string>
#include <string_view>

namespace gbsynth
{

std::string to_string( monomial const& m, variable_table const& vars );
std::string to_string( polynomial const& p, variable_table const& vars, monomial_order const& ord );

polynomial parse_polynomial( std::string_view text, variable_table const& vars );

} // namespace gbsynth
