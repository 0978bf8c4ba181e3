/* Shared pieces of the oracle sweeps (internal header). */

#pragma once

#include "gbsynth/errors.hpp"
#include "gbsynth/oracle.hpp"
#include "gbsynth/row_eval.hpp"

#include <algorithm>

namespace gbsynth::oracle_detail
{

inline std::size_t checked_input_count( truth_table const& table, oracle_options const& opts )
{
  auto const l = table.vars().num_inputs();
  if ( l > opts.input_cap || l > 31 )
    throw cap_exceeded_error( "domain enumeration over " + std::to_string( l ) + " inputs exceeds the cap of " +
                              std::to_string( std::min<std::size_t>( opts.input_cap, 31 ) ) );
  return l;
}

/* classify one input point: admitted output values and the matching rows */
struct point_semantics
{
  unsigned admitted = 0; /* bit 0: output 0, bit 1: output 1 */
  std::vector<std::size_t> matching_rows; /* 1-based table indices */
};

inline point_semantics classify_point( cube_evaluator const& eval, std::vector<std::size_t> const& constrained,
                                       cube_point input_mask )
{
  point_semantics ps;
  for ( auto const r : constrained )
  {
    unsigned const adm = eval.admitted_outputs( r, input_mask );
    if ( adm != 0 )
    {
      ps.admitted |= adm;
      ps.matching_rows.push_back( r + 1 );
    }
  }
  return ps;
}

inline void sort_conflicts( std::vector<domain_report::conflict_t>& conflicts, std::size_t num_inputs )
{
  std::sort( conflicts.begin(), conflicts.end(), [num_inputs]( auto const& a, auto const& b ) {
    return input_lex_less( a.input_mask, b.input_mask, num_inputs );
  } );
}

/* the full-cube point for (input mask, output value); intermediates are zero,
   which is irrelevant for intermediate-free polynomials */
inline cube_point form_point( variable_table const& vars, cube_point input_mask, gf2 output )
{
  auto const k = vars.num_intermediates();
  return ( input_mask << ( k + 1 ) ) | ( cube_point( output & 1u ) << k );
}

/* in-place Moebius transform over the subset lattice of the input cube */
inline void moebius_transform( std::vector<gf2>& values, std::size_t l )
{
  for ( std::size_t j = 0; j < l; ++j )
  {
    std::size_t const bit = std::size_t( 1 ) << j;
    for ( std::size_t m = 0; m < values.size(); ++m )
    {
      if ( m & bit )
        values[m] ^= values[m ^ bit];
    }
  }
}

/* ordering-maximal monomial of a coefficient array; unit monomial when all
   coefficients vanish */
inline monomial leading_anf_monomial( std::vector<gf2> const& coeffs, variable_table const& vars,
                                      monomial_order const& ord )
{
  auto const n = vars.num_vars();
  monomial best( n );
  bool found = false;
  for ( std::size_t m = 0; m < coeffs.size(); ++m )
  {
    if ( !coeffs[m] )
      continue;
    monomial cand( n );
    for ( std::size_t j = 0; j < vars.num_inputs(); ++j )
    {
      if ( m & ( std::size_t( 1 ) << j ) )
        cand = cand.times( monomial::variable( n, vars.input_index( j ) ) );
    }
    if ( !found || ord.greater( cand, best ) )
    {
      best = std::move( cand );
      found = true;
    }
  }
  return best;
}

struct completion_sweep
{
  domain_report report;
  std::vector<gf2> base_values;          /* tau with don't cares zeroed */
  std::vector<std::size_t> dont_care_masks;
};

inline completion_sweep prepare_completion_sweep( truth_table const& table, oracle_options const& opts,
                                                  domain_report report )
{
  if ( !report.well_defined() )
    throw std::invalid_argument( "table is ill-defined: rows admit conflicting outputs" );
  completion_sweep sw;
  sw.base_values.resize( report.tau.size() );
  for ( std::size_t m = 0; m < report.tau.size(); ++m )
  {
    if ( report.tau[m] < 0 )
      sw.dont_care_masks.push_back( m );
    else
      sw.base_values[m] = static_cast<gf2>( report.tau[m] );
  }
  if ( sw.dont_care_masks.size() > opts.dont_care_cap )
    throw cap_exceeded_error( "completion sweep over " + std::to_string( sw.dont_care_masks.size() ) +
                              " don't cares exceeds the cap of " + std::to_string( opts.dont_care_cap ) );
  (void)table;
  sw.report = std::move( report );
  return sw;
}

inline monomial completion_candidate( completion_sweep const& sw, std::size_t completion, variable_table const& vars,
                                      monomial_order const& ord )
{
  auto values = sw.base_values;
  for ( std::size_t idx = 0; idx < sw.dont_care_masks.size(); ++idx )
    values[sw.dont_care_masks[idx]] = ( completion >> idx ) & 1u;
  moebius_transform( values, vars.num_inputs() );
  return leading_anf_monomial( values, vars, ord );
}

} // namespace gbsynth::oracle_detail
