/* OpenMP-parallel oracle sweeps plus the order-independent checks.
   Reports are bit-identical to the serial references: per-point results go
   to disjoint slots and witnesses are combined under the fixed input
   ordering, never first-come-first-served. */

#include "oracle_detail.hpp"

#include "gbsynth/poly_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gbsynth
{

using namespace oracle_detail;

std::size_t domain_report::domain_size() const
{
  std::size_t count = 0;
  for ( auto const v : tau )
  {
    if ( v >= 0 )
      ++count;
  }
  return count;
}

domain_report enumerate_domain( truth_table const& table, oracle_options const& opts )
{
  auto const l = checked_input_count( table, opts );
  cube_evaluator const eval( table );
  auto const constrained = table.constrained_rows();

  domain_report rep;
  rep.num_inputs = l;
  rep.tau.assign( std::size_t( 1 ) << l, -1 );

  std::int64_t const count = std::int64_t( 1 ) << l;
#pragma omp parallel
  {
    std::vector<domain_report::conflict_t> local;
#pragma omp for schedule( static )
    for ( std::int64_t s = 0; s < count; ++s )
    {
      auto const ps = classify_point( eval, constrained, cube_point( s ) );
      if ( ps.admitted == 3u )
        local.push_back( { cube_point( s ), ps.matching_rows } );
      else if ( ps.admitted != 0 )
        rep.tau[std::size_t( s )] = ( ps.admitted & 2u ) ? 1 : 0;
    }
#pragma omp critical
    rep.conflicts.insert( rep.conflicts.end(), local.begin(), local.end() );
  }
  sort_conflicts( rep.conflicts, l );
  return rep;
}

verify_report verify_form( polynomial_form const& form, truth_table const& table, oracle_options const& opts )
{
  auto rep = enumerate_domain( table, opts );
  if ( !rep.well_defined() )
    throw std::invalid_argument( "table is ill-defined: rows admit conflicting outputs" );

  auto const mp = mask_polynomial::from( form.poly );
  auto const& vars = table.vars();
  auto const l = vars.num_inputs();

  verify_report out;
  out.domain_size = rep.domain_size();

  std::int64_t const count = std::int64_t( 1 ) << l;
  std::size_t checked = 0;
  bool any_failure = false;
  cube_point worst = 0;
#pragma omp parallel
  {
    std::optional<cube_point> local_worst;
    std::size_t local_checked = 0;
#pragma omp for schedule( static )
    for ( std::int64_t s = 0; s < count; ++s )
    {
      if ( rep.tau[std::size_t( s )] < 0 )
        continue;
      ++local_checked;
      if ( mp.evaluate( form_point( vars, cube_point( s ), static_cast<gf2>( rep.tau[std::size_t( s )] ) ) ) )
      {
        if ( !local_worst || input_lex_less( cube_point( s ), *local_worst, l ) )
          local_worst = cube_point( s );
      }
    }
#pragma omp critical
    {
      checked += local_checked;
      if ( local_worst && ( !any_failure || input_lex_less( *local_worst, worst, l ) ) )
      {
        any_failure = true;
        worst = *local_worst;
      }
    }
  }
  out.points_checked = checked;
  out.pass = !any_failure;
  if ( any_failure )
    out.first_failure = unpack_inputs( worst, l );
  return out;
}

polynomial anf_of_total_function( variable_table const& vars, std::vector<gf2> const& values )
{
  auto const l = vars.num_inputs();
  if ( l > 31 || values.size() != ( std::size_t( 1 ) << l ) )
    throw std::invalid_argument( "value table must cover all 2^l input assignments" );

  auto coeffs = values;
  moebius_transform( coeffs, l );

  auto const n = vars.num_vars();
  std::vector<monomial> terms;
  for ( std::size_t m = 0; m < coeffs.size(); ++m )
  {
    if ( !coeffs[m] )
      continue;
    monomial t( n );
    for ( std::size_t j = 0; j < l; ++j )
    {
      if ( m & ( std::size_t( 1 ) << j ) )
        t = t.times( monomial::variable( n, vars.input_index( j ) ) );
    }
    terms.push_back( std::move( t ) );
  }
  return polynomial::from_terms( n, std::move( terms ) );
}

monomial minimal_completion_multidegree( truth_table const& table, monomial_order const& ord,
                                         oracle_options const& opts )
{
  auto const sw = prepare_completion_sweep( table, opts, enumerate_domain( table, opts ) );
  auto const& vars = table.vars();

  std::int64_t const count = std::int64_t( 1 ) << sw.dont_care_masks.size();
  monomial best = completion_candidate( sw, 0, vars, ord );
#pragma omp parallel
  {
    std::optional<monomial> local_best;
#pragma omp for schedule( static )
    for ( std::int64_t c = 1; c < count; ++c )
    {
      auto cand = completion_candidate( sw, std::size_t( c ), vars, ord );
      if ( !local_best || ord.less( cand, *local_best ) )
        local_best = std::move( cand );
    }
#pragma omp critical
    {
      if ( local_best && ord.less( *local_best, best ) )
        best = std::move( *local_best );
    }
  }
  return best;
}

namespace
{

void check_spairs( groebner_basis const& basis, basis_report& rep )
{
  auto const& g = basis.elements;
  for ( std::size_t i = 0; i < g.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < g.size(); ++j )
    {
      auto const s = s_polynomial( g[i], g[j], basis.ord );
      if ( !s.is_zero() && !normal_form( s, g, basis.ord ).is_zero() )
      {
        rep.spairs_ok = false;
        rep.violations.push_back( "S-polynomial of elements " + std::to_string( i + 1 ) + " and " +
                                  std::to_string( j + 1 ) + " does not reduce to zero" );
      }
    }
  }
}

void check_reducedness( groebner_basis const& basis, basis_report& rep )
{
  auto const& g = basis.elements;
  for ( std::size_t i = 0; i < g.size(); ++i )
  {
    for ( std::size_t j = 0; j < g.size(); ++j )
    {
      if ( i == j )
        continue;
      auto const& lt = g[j].leading_term( basis.ord );
      for ( auto const& m : g[i].terms() )
      {
        if ( lt.divides( m ) )
        {
          rep.reduced_ok = false;
          rep.violations.push_back( "element " + std::to_string( i + 1 ) + " has a monomial divisible by the leading term of element " +
                                    std::to_string( j + 1 ) );
        }
      }
    }
  }
}

} // namespace

basis_report check_basis_properties( groebner_basis const& basis )
{
  basis_report rep;
  check_spairs( basis, rep );
  check_reducedness( basis, rep );
  return rep;
}

basis_report check_basis_properties( groebner_basis const& basis, variable_table const& vars )
{
  auto rep = check_basis_properties( basis );

  /* input squares must lie in the ideal of the non-form, intermediate-free
     leading terms; together with reducedness this forces multilinear forms */
  auto const out_var = monomial::variable( vars.num_vars(), vars.output_index() );
  std::vector<monomial> lts;
  for ( auto const& p : eliminate_intermediates( basis, vars ) )
  {
    auto const& lt = p.leading_term( basis.ord );
    if ( lt != out_var )
      lts.push_back( lt );
  }
  for ( std::size_t j = 0; j < vars.num_inputs(); ++j )
  {
    auto const square = monomial::variable( vars.num_vars(), vars.input_index( j ), 2 );
    bool covered = false;
    for ( auto const& lt : lts )
    {
      if ( lt.divides( square ) )
      {
        covered = true;
        break;
      }
    }
    if ( !covered )
    {
      rep.field_cover_ok = false;
      rep.violations.push_back( "square of input '" + vars.name( vars.input_index( j ) ) +
                                "' is not covered by the non-form leading terms" );
    }
  }
  return rep;
}

} // namespace gbsynth
