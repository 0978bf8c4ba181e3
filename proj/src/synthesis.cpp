#include "gbsynth/synthesis.hpp"

#include "gbsynth/errors.hpp"
#include "gbsynth/row_eval.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace gbsynth
{

polynomial polynomial_form::input_tail( variable_table const& vars ) const
{
  auto const out = vars.index_of( output_var );
  if ( !out )
    throw std::invalid_argument( "form output variable not in roster" );
  return poly + polynomial::variable( vars.num_vars(), *out );
}

monomial polynomial_form::multidegree( monomial_order const& ord, variable_table const& vars ) const
{
  auto const tail = input_tail( vars );
  if ( tail.is_zero() )
    return monomial( vars.num_vars() );
  return tail.leading_term( ord );
}

polynomial_form make_polynomial_form( polynomial poly, variable_table const& vars, monomial_order const& ord )
{
  if ( poly.is_zero() )
    throw std::invalid_argument( "the zero polynomial is not a form" );
  auto const out = vars.output_index();
  if ( poly.leading_term( ord ) != monomial::variable( vars.num_vars(), out ) )
    throw std::invalid_argument( "form leading term must be exactly the output variable" );
  for ( std::size_t i = 0; i < vars.num_intermediates(); ++i )
  {
    if ( poly.mentions( i ) )
      throw std::invalid_argument( "form mentions intermediate variable '" + vars.name( i ) + "'" );
  }
  if ( !poly.is_multilinear() )
    throw std::invalid_argument( "form is not multilinear" );
  return polynomial_form{ std::move( poly ), vars.output_name() };
}

ideal row_ideal( table_row const& row, variable_table const& vars )
{
  std::size_t const n = vars.num_vars();
  std::vector<polynomial> gens = row.equations;
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const x = monomial::variable( n, i );
    gens.push_back( polynomial::from_terms( n, { x.times( x ), x } ) );
  }
  return ideal( n, std::move( gens ) );
}

bool is_field_polynomial( polynomial const& p )
{
  if ( p.term_count() != 2 )
    return false;
  auto const& a = p.terms()[0];
  auto const& b = p.terms()[1];
  std::size_t var = SIZE_MAX;
  for ( std::size_t i = 0; i < a.num_vars(); ++i )
  {
    if ( a.exponent( i ) == 0 )
      continue;
    if ( var != SIZE_MAX || a.exponent( i ) != 2 )
      return false;
    var = i;
  }
  return var != SIZE_MAX && b == monomial::variable( b.num_vars(), var );
}

monomial_order elimination_block_order( variable_table const& vars )
{
  return monomial_order::block( vars.num_intermediates() + 1 );
}

namespace
{

/* bitset over the 2^l input cube of the masks a row can satisfy */
std::vector<std::uint64_t> satisfiable_inputs( cube_evaluator const& eval, std::size_t row )
{
  std::size_t const l = eval.num_inputs();
  std::vector<std::uint64_t> bits( ( ( std::size_t( 1 ) << l ) + 63 ) / 64, 0 );
  for ( cube_point s = 0; s < ( cube_point( 1 ) << l ); ++s )
  {
    if ( eval.row_satisfiable( row, s ) )
      bits[s >> 6] |= std::uint64_t( 1 ) << ( s & 63 );
  }
  return bits;
}

} // namespace

disjoint_report check_disjoint_inputs( truth_table const& table, std::size_t input_cap )
{
  auto const l = table.vars().num_inputs();
  if ( l > input_cap || l > 31 )
    throw cap_exceeded_error( "disjointness scan over " + std::to_string( l ) + " inputs exceeds the cap of " +
                              std::to_string( std::min<std::size_t>( input_cap, 31 ) ) );

  cube_evaluator const eval( table );
  auto const rows = table.constrained_rows();
  std::vector<std::vector<std::uint64_t>> sets;
  sets.reserve( rows.size() );
  for ( auto const r : rows )
    sets.push_back( satisfiable_inputs( eval, r ) );

  disjoint_report rep;
  for ( std::size_t a = 0; a < rows.size(); ++a )
  {
    for ( std::size_t b = a + 1; b < rows.size(); ++b )
    {
      std::optional<cube_point> first;
      for ( std::size_t w = 0; w < sets[a].size(); ++w )
      {
        std::uint64_t common = sets[a][w] & sets[b][w];
        while ( common )
        {
          cube_point const s = cube_point( w * 64 + std::size_t( std::countr_zero( common ) ) );
          common &= common - 1;
          if ( !first || input_lex_less( s, *first, l ) )
            first = s;
        }
      }
      if ( first )
      {
        rep.disjoint = false;
        rep.witness = disjoint_report::overlap_t{ rows[a] + 1, rows[b] + 1, unpack_inputs( *first, l ) };
        return rep;
      }
    }
  }
  return rep;
}

coprimality_report check_pairwise_coprime( truth_table const& table, monomial_order const& ord,
                                           buchberger_options const& opts, bool parallel )
{
  auto const rows = table.constrained_rows();
  std::vector<ideal> ideals;
  ideals.reserve( rows.size() );
  for ( auto const r : rows )
    ideals.push_back( row_ideal( table.rows()[r], table.vars() ) );

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for ( std::size_t a = 0; a < ideals.size(); ++a )
  {
    for ( std::size_t b = a + 1; b < ideals.size(); ++b )
      pairs.emplace_back( a, b );
  }

  std::vector<std::uint8_t> coprime( pairs.size(), 1 );
#pragma omp parallel for schedule( dynamic ) if ( parallel )
  for ( std::ptrdiff_t p = 0; p < std::ptrdiff_t( pairs.size() ); ++p )
  {
    auto const [a, b] = pairs[std::size_t( p )];
    coprime[std::size_t( p )] = is_coprime( ideals[a], ideals[b], ord, opts ) ? 1 : 0;
  }

  coprimality_report rep;
  for ( std::size_t p = 0; p < pairs.size(); ++p )
  {
    if ( !coprime[p] )
    {
      rep.all_coprime = false;
      rep.witness = { rows[pairs[p].first] + 1, rows[pairs[p].second] + 1 };
      break;
    }
  }
  return rep;
}

/* Coprimality policy: a passing disjointness scan implies pairwise coprime
   row ideals.  On overlap, distinguish the two failure modes: conflicting
   outputs at a shared input, or genuinely non-coprime ideals. */
void check_row_compatibility( truth_table const& table, monomial_order const& ord, synthesis_options const& opts )
{
  auto const rows = table.constrained_rows();
  if ( rows.size() < 2 )
    return;

  bool scan_ok = false;
  std::optional<disjoint_report> scan;
  try
  {
    scan = check_disjoint_inputs( table, opts.input_enumeration_cap );
    scan_ok = true;
  }
  catch ( cap_exceeded_error const& )
  {
    /* too many inputs: fall back to the Groebner check below */
  }

  if ( scan_ok && scan->disjoint )
    return;

  if ( scan_ok && scan->witness )
  {
    /* refine the first overlap: conflicting outputs beat a coprimality report */
    auto const& w = *scan->witness;
    cube_evaluator const eval( table );
    cube_point mask = 0;
    for ( std::size_t j = 0; j < w.inputs.size(); ++j )
      mask |= cube_point( w.inputs[j] & 1u ) << j;
    unsigned const oa = eval.admitted_outputs( w.row_a - 1, mask );
    unsigned const ob = eval.admitted_outputs( w.row_b - 1, mask );
    if ( ( oa & ob ) == 0 )
    {
      throw coprimality_violation( "rows " + std::to_string( w.row_a ) + " and " + std::to_string( w.row_b ) +
                                       " overlap on an input assignment but force conflicting outputs",
                                   w.row_a, w.row_b );
    }
  }

  auto const rep = check_pairwise_coprime( table, ord, opts.buchberger, opts.parallel_checks );
  if ( !rep.all_coprime )
  {
    auto const [a, b] = *rep.witness;
    throw coprimality_violation(
        "row ideals " + std::to_string( a ) + " and " + std::to_string( b ) + " are not coprime", a, b );
  }
}

groebner_basis assemble_ideal( truth_table const& table, monomial_order const& ord, synthesis_options const& opts,
                               synthesis_stats* stats, std::vector<std::size_t>* excluded_rows )
{
  auto const& vars = table.vars();
  auto const rows = table.constrained_rows();
  if ( excluded_rows )
  {
    for ( std::size_t i = 0; i < table.num_rows(); ++i )
    {
      if ( !table.row_constrains_output( i ) )
        excluded_rows->push_back( i + 1 );
    }
  }
  if ( rows.empty() )
    throw no_form_error( "no row constrains output '" + vars.output_name() + "'" );

  check_row_compatibility( table, ord, opts );

  buchberger_stats bstats;
  groebner_basis acc = reduced_groebner_basis( row_ideal( table.rows()[rows[0]], vars ), ord, opts.buchberger, &bstats );
  for ( std::size_t i = 1; i < rows.size(); ++i )
  {
    auto const next = row_ideal( table.rows()[rows[i]], vars );
    auto const prod = ideal_product( ideal( vars.num_vars(), acc.elements ), next );
    acc = reduced_groebner_basis( prod, ord, opts.buchberger, &bstats );
  }

  if ( stats )
  {
    stats->pair_count += bstats.pairs_formed;
    stats->reduction_count += bstats.reduction_steps;
  }
  return acc;
}

std::vector<polynomial> eliminate_intermediates( groebner_basis const& basis, variable_table const& vars )
{
  std::vector<polynomial> kept;
  for ( auto const& p : basis.elements )
  {
    bool free_of_intermediates = true;
    for ( std::size_t i = 0; i < vars.num_intermediates() && free_of_intermediates; ++i )
    {
      if ( p.mentions( i ) )
        free_of_intermediates = false;
    }
    if ( free_of_intermediates )
      kept.push_back( p );
  }
  return kept;
}

polynomial_form extract_polynomial_form( groebner_basis const& basis, variable_table const& vars )
{
  auto const slice = eliminate_intermediates( basis, vars );
  auto const out_var = monomial::variable( vars.num_vars(), vars.output_index() );

  std::vector<polynomial> forms;
  for ( auto const& p : slice )
  {
    if ( !p.is_zero() && p.leading_term( basis.ord ) == out_var )
      forms.push_back( p );
  }
  if ( forms.empty() )
    throw no_form_error( "no basis element has leading term '" + vars.output_name() +
                         "': the table does not determine the output" );
  if ( forms.size() > 1 )
    throw std::logic_error( "multiple form candidates in a reduced basis" );
  return make_polynomial_form( forms.front(), vars, basis.ord );
}

synthesis_result synthesize( truth_table const& table, monomial_order const& ord, synthesis_options const& opts )
{
  auto const t0 = std::chrono::steady_clock::now();
  synthesis_stats stats;
  std::vector<std::size_t> excluded;
  auto basis = assemble_ideal( table, ord, opts, &stats, &excluded );
  auto form = extract_polynomial_form( basis, table.vars() );
  auto eliminated = eliminate_intermediates( basis, table.vars() );
  stats.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>( std::chrono::steady_clock::now() - t0 )
          .count();
  return synthesis_result{ std::move( form ), std::move( basis ), std::move( eliminated ), stats, std::move( excluded ) };
}

} // namespace gbsynth
