/*! \file bool_expr.hpp
  \brief Boolean expression trees and their rewrite into GF(2) polynomials

  Rewrite rules: !x -> x + 1, x | y -> x + y + x*y, & is the ring product,
  ^ and + are the ring sum.  Products are expanded literally, so x & x
  becomes x^2; on {0,1} points that evaluates the same as x, and the field
  polynomials take care of the rest downstream.

  Expression grammar (used for truth-table equations):
    expr    := orexpr
    orexpr  := xorexpr ('|' xorexpr)*
    xorexpr := andexpr (('^' | '+') andexpr)*
    andexpr := notexpr (('&' | '*') notexpr)*
    notexpr := '!' notexpr | atom
    atom    := '0' | '1' | ident ('^' uint)? | '(' expr ')'
  A '^' directly followed by an integer literal is an exponent; otherwise it
  is XOR.  Write `x + 1` (or `!x`) rather than `x ^ 1`.
*/

#pragma once

#include "polynomial.hpp"
#include "variable_table.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace gbsynth
{

struct bool_expr;
using bool_expr_ptr = std::shared_ptr<bool_expr const>;

struct bool_expr
{
  enum class op_t
  {
    constant,
    variable,
    op_not,
    op_and,
    op_or,
    op_xor
  };

  op_t op;
  bool value = false;  /* constant */
  std::string var;     /* variable */
  bool_expr_ptr lhs;
  bool_expr_ptr rhs;

  static bool_expr_ptr constant( bool v );
  static bool_expr_ptr variable( std::string name );
  static bool_expr_ptr make_not( bool_expr_ptr e );
  static bool_expr_ptr make_and( bool_expr_ptr a, bool_expr_ptr b );
  static bool_expr_ptr make_or( bool_expr_ptr a, bool_expr_ptr b );
  static bool_expr_ptr make_xor( bool_expr_ptr a, bool_expr_ptr b );
};

/* throws parse_error on undeclared variables */
polynomial bool_to_poly( bool_expr const& e, variable_table const& vars );

bool_expr_ptr parse_bool_expr( std::string_view text );

} // namespace gbsynth
