/* Serial reference implementations of the oracle sweeps.  Kept deliberately
   plain: the OpenMP variants in oracle.cpp must produce identical reports,
   and the tests hold them to that. */

#include "oracle_detail.hpp"

namespace gbsynth
{

using namespace oracle_detail;

domain_report enumerate_domain_serial( truth_table const& table, oracle_options const& opts )
{
  auto const l = checked_input_count( table, opts );
  cube_evaluator const eval( table );
  auto const constrained = table.constrained_rows();

  domain_report rep;
  rep.num_inputs = l;
  rep.tau.assign( std::size_t( 1 ) << l, -1 );

  for ( cube_point s = 0; s < ( cube_point( 1 ) << l ); ++s )
  {
    auto const ps = classify_point( eval, constrained, s );
    if ( ps.admitted == 3u )
      rep.conflicts.push_back( { s, ps.matching_rows } );
    else if ( ps.admitted != 0 )
      rep.tau[s] = ( ps.admitted & 2u ) ? 1 : 0;
  }
  sort_conflicts( rep.conflicts, l );
  return rep;
}

verify_report verify_form_serial( polynomial_form const& form, truth_table const& table, oracle_options const& opts )
{
  auto rep = enumerate_domain_serial( table, opts );
  if ( !rep.well_defined() )
    throw std::invalid_argument( "table is ill-defined: rows admit conflicting outputs" );

  auto const mp = mask_polynomial::from( form.poly );
  auto const& vars = table.vars();

  verify_report out;
  out.domain_size = rep.domain_size();
  std::optional<cube_point> worst;
  for ( cube_point s = 0; s < rep.tau.size(); ++s )
  {
    if ( rep.tau[s] < 0 )
      continue;
    ++out.points_checked;
    if ( mp.evaluate( form_point( vars, s, static_cast<gf2>( rep.tau[s] ) ) ) )
    {
      if ( !worst || input_lex_less( s, *worst, vars.num_inputs() ) )
        worst = s;
    }
  }
  out.pass = !worst.has_value();
  if ( worst )
    out.first_failure = unpack_inputs( *worst, vars.num_inputs() );
  return out;
}

monomial minimal_completion_multidegree_serial( truth_table const& table, monomial_order const& ord,
                                                oracle_options const& opts )
{
  auto const sw = prepare_completion_sweep( table, opts, enumerate_domain_serial( table, opts ) );
  auto const& vars = table.vars();

  monomial best = completion_candidate( sw, 0, vars, ord );
  for ( std::size_t c = 1; c < ( std::size_t( 1 ) << sw.dont_care_masks.size() ); ++c )
  {
    auto cand = completion_candidate( sw, c, vars, ord );
    if ( ord.less( cand, best ) )
      best = std::move( cand );
  }
  return best;
}

} // namespace gbsynth
