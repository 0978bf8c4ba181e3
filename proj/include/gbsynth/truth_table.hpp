/*! \file truth_table.hpp
  \brief Truth tables as lists of homogeneous polynomial equation rows

  Each row is a set of polynomials f with the reading f = 0; the solutions
  of a row fix the output for the inputs the row covers.  A row that never
  mentions the output variable leaves its inputs as don't cares.
*/

#pragma once

#include "polynomial.hpp"
#include "variable_table.hpp"

#include <cstddef>
#include <vector>

namespace gbsynth
{

struct table_row
{
  std::vector<polynomial> equations;
};

class truth_table
{
public:
  truth_table( variable_table vars, std::vector<table_row> rows );

  variable_table const& vars() const { return vars_; }
  std::vector<table_row> const& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }

  /* does this row constrain the output at all? */
  bool row_constrains_output( std::size_t row_index ) const;

  /* indices of rows with at least one output-mentioning equation */
  std::vector<std::size_t> constrained_rows() const;

private:
  variable_table vars_;
  std::vector<table_row> rows_;
};

} // namespace gbsynth
