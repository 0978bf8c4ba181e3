/*! \file table_format.hpp
  \brief Truth-table documents: the text format, a JSON variant, printing

  Text format, line oriented, '#' starts a comment:

    [inputs]        OP0 OP1 a2 a1 a0 b2 b1 b0
    [output]        c2 c1 c0 flag          # first name is the default
    [intermediates] carry0 carry1          # optional
    [options]
    order = lex
    [row]
    OP0 = 1, OP1 = 1                       # commas separate equations
    c2 = a2 + b2 + carry1
    carry0 = a0 & b0

  Equations use the expression grammar of bool_expr.hpp on both sides of a
  single '='; a bare expression reads as `expr = 0`.  Files ending in .json
  carry the same fields as a JSON object.

  Building a truth table selects one declared output; equations mentioning
  any other declared output are dropped for that run.
*/

#pragma once

#include "truth_table.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gbsynth
{

struct table_document
{
  std::vector<std::string> inputs;
  std::vector<std::string> outputs; /* at least one; first is the default */
  std::vector<std::string> intermediates;
  struct raw_row
  {
    std::vector<std::string> equations;
    std::size_t line = 0;
  };
  std::vector<raw_row> rows;
  std::map<std::string, std::string> options;
};

table_document parse_table_document( std::string_view text );
table_document parse_table_document_json( std::string_view text );
table_document load_table_document( std::filesystem::path const& path );

truth_table build_truth_table( table_document const& doc, std::string_view output = {},
                               std::vector<std::string> const& input_order = {} );

/* canonical single-output rendering; parsing it back yields the same table */
std::string to_text( truth_table const& table, monomial_order const& ord );

} // namespace gbsynth
