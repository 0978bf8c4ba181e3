/*! \file oracle.hpp
  \brief Independent brute-force verification of synthesis results

  Everything here enumerates the Boolean cube directly: domain and output
  values point by point, algebraic normal forms by Moebius transform over
  the subset lattice, and don't-care resolutions by sweeping all
  completions.  None of it touches the Groebner machinery, which is the
  point — these are the checks the engine has to agree with.

  The sweeps come in OpenMP-parallel and plain serial variants.  The serial
  ones are the reference: tests assert both produce identical reports.
*/

#pragma once

#include "groebner.hpp"
#include "synthesis.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gbsynth
{

struct oracle_options
{
  std::size_t input_cap = 24;     /* max l for full-cube sweeps */
  std::size_t dont_care_cap = 12; /* max d for completion sweeps */
};

struct domain_report
{
  std::size_t num_inputs = 0;

  /* indexed by input mask (bit j = value of input j); -1 marks points
     outside the domain */
  std::vector<std::int8_t> tau;

  struct conflict_t
  {
    std::uint32_t input_mask = 0;
    std::vector<std::size_t> rows; /* 1-based indices of the rows involved */

    bool operator==( conflict_t const& ) const = default;
  };
  std::vector<conflict_t> conflicts; /* sorted by input vector, lexicographically */

  std::size_t domain_size() const;
  bool well_defined() const { return conflicts.empty(); }

  bool operator==( domain_report const& ) const = default;
};

domain_report enumerate_domain( truth_table const& table, oracle_options const& opts = {} );
domain_report enumerate_domain_serial( truth_table const& table, oracle_options const& opts = {} );

struct verify_report
{
  bool pass = false;
  std::size_t domain_size = 0;
  std::size_t points_checked = 0;
  std::optional<std::vector<gf2>> first_failure; /* input values, declaration order */
};

verify_report verify_form( polynomial_form const& form, truth_table const& table, oracle_options const& opts = {} );
verify_report verify_form_serial( polynomial_form const& form, truth_table const& table,
                                  oracle_options const& opts = {} );

/* unique multilinear interpolant of a total function on the input cube;
   values are indexed by input mask */
polynomial anf_of_total_function( variable_table const& vars, std::vector<gf2> const& values );

/* smallest ordering-maximal input monomial over all 2^d completions of the
   table's don't cares */
monomial minimal_completion_multidegree( truth_table const& table, monomial_order const& ord,
                                         oracle_options const& opts = {} );
monomial minimal_completion_multidegree_serial( truth_table const& table, monomial_order const& ord,
                                                oracle_options const& opts = {} );

struct basis_report
{
  bool spairs_ok = true;       /* every S-polynomial reduces to zero */
  bool reduced_ok = true;      /* no monomial divisible by another element's leading term */
  bool field_cover_ok = true;  /* every input square lies in the non-form leading-term ideal */
  std::vector<std::string> violations;

  bool pass() const { return spairs_ok && reduced_ok && field_cover_ok; }
};

basis_report check_basis_properties( groebner_basis const& basis );
basis_report check_basis_properties( groebner_basis const& basis, variable_table const& vars );

} // namespace gbsynth
