/*! \file synthesis.hpp
  \brief End-to-end synthesis: row ideals, the product fold, form extraction

  The pipeline builds one ideal per output-constraining row (row equations
  plus all field polynomials x^2 + x), folds their product two rows at a
  time with a reduced basis computed after every step, and finally extracts
  from the intermediate-free slice of the basis the unique element whose
  leading term is the output variable.

  Rows that never mention the output are excluded from the product: their
  inputs are don't cares.  Each exclusion is reported in the result.
*/

#pragma once

#include "groebner.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gbsynth
{

/* multilinear, intermediate-free, leading term exactly the output variable */
struct polynomial_form
{
  polynomial poly;
  std::string output_var;

  /* the form with the output variable removed, i.e. what the output equals */
  polynomial input_tail( variable_table const& vars ) const;

  /* ordering-maximal input-side monomial; the unit monomial for a bare output */
  monomial multidegree( monomial_order const& ord, variable_table const& vars ) const;
};

/* validates the form invariants against the table's variable roster */
polynomial_form make_polynomial_form( polynomial poly, variable_table const& vars, monomial_order const& ord );

struct synthesis_stats
{
  std::size_t pair_count = 0;      /* S-pairs formed across all basis computations */
  std::size_t reduction_count = 0; /* single division steps */
  double wall_ms = 0.0;
};

struct synthesis_result
{
  polynomial_form form;
  groebner_basis full_basis;                /* reduced basis of the product ideal */
  std::vector<polynomial> eliminated_basis; /* intermediate-free slice */
  synthesis_stats stats;
  std::vector<std::size_t> excluded_rows;   /* 1-based indices of don't-care rows */
};

struct synthesis_options
{
  buchberger_options buchberger;
  std::size_t input_enumeration_cap = 24; /* above this many inputs the disjointness scan is skipped */
  bool parallel_checks = true;            /* pairwise coprimality fallback */
};

struct disjoint_report
{
  bool disjoint = true;
  struct overlap_t
  {
    std::size_t row_a = 0, row_b = 0; /* 1-based */
    std::vector<gf2> inputs;          /* shared input assignment, declaration order */
  };
  std::optional<overlap_t> witness;
};

struct coprimality_report
{
  bool all_coprime = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness; /* 1-based rows */
};

/* row equations plus one field polynomial per variable */
ideal row_ideal( table_row const& row, variable_table const& vars );

/* exhaustive pairwise scan of the rows' satisfiable input sets */
disjoint_report check_disjoint_inputs( truth_table const& table, std::size_t input_cap = 24 );

/* Groebner check of every pair of constrained-row ideals */
coprimality_report check_pairwise_coprime( truth_table const& table, monomial_order const& ord,
                                           buchberger_options const& opts = {}, bool parallel = true );

/* reduced basis of the product of the constrained rows' ideals */
groebner_basis assemble_ideal( truth_table const& table, monomial_order const& ord,
                               synthesis_options const& opts = {}, synthesis_stats* stats = nullptr,
                               std::vector<std::size_t>* excluded_rows = nullptr );

/* intermediate-free elements of a basis */
std::vector<polynomial> eliminate_intermediates( groebner_basis const& basis, variable_table const& vars );

polynomial_form extract_polynomial_form( groebner_basis const& basis, variable_table const& vars );

synthesis_result synthesize( truth_table const& table, monomial_order const& ord, synthesis_options const& opts = {} );

/* x_i^2 + x_i for some variable i */
bool is_field_polynomial( polynomial const& p );

/* block order eliminating intermediates and output: lex on them, grlex on inputs */
monomial_order elimination_block_order( variable_table const& vars );

} // namespace gbsynth
