/* Serial vs OpenMP comparison of the exhaustive oracle kernels and the
   pairwise coprimality check.  Each kernel is timed in both variants and the
   results are cross-checked for equality; a mismatch is a bug, not a
   performance problem. */

#include "gbsynth/oracle.hpp"
#include "gbsynth/synthesis.hpp"
#include "gbsynth/table_format.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <string>

using namespace gbsynth;

namespace
{

double seconds( std::chrono::steady_clock::time_point t0 )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
}

void report( std::string const& name, double serial_s, double parallel_s, bool match )
{
  std::cout << name << ": serial " << serial_s << " s, openmp " << parallel_s << " s, speedup "
            << ( parallel_s > 0 ? serial_s / parallel_s : 0.0 ) << ( match ? "" : "  ** MISMATCH **" ) << '\n';
}

/* a table over `l` inputs with one intermediate: rows guard on the first two
   inputs and define the output through a parity/majority mix */
truth_table synthetic_table( std::size_t l )
{
  std::vector<std::string> inputs;
  for ( std::size_t j = 0; j < l; ++j )
    inputs.push_back( "x" + std::to_string( j ) );
  variable_table vars( { "t" }, "z", inputs );
  std::size_t const n = vars.num_vars();

  auto const in = [&]( std::size_t j ) { return polynomial::variable( n, vars.input_index( j ) ); };
  auto const one = polynomial::one( n );
  auto const t = polynomial::variable( n, 0 );
  auto const z = polynomial::variable( n, vars.output_index() );

  polynomial parity = polynomial::zero( n );
  for ( std::size_t j = 2; j < l; ++j )
    parity += in( j );

  std::vector<table_row> rows;
  rows.push_back( { { in( 0 ), in( 1 ), t + in( 2 ) * in( 3 ), z + t + parity } } );
  rows.push_back( { { in( 0 ), in( 1 ) + one, z + in( 2 ) * in( 3 ) + in( 4 ) } } );
  rows.push_back( { { in( 0 ) + one, in( 1 ), z + parity * in( 2 ) } } );
  rows.push_back( { { in( 0 ) + one, in( 1 ) + one, t + in( 2 ) + in( 3 ), z + t * in( 4 ) + one } } );
  return truth_table( vars, rows );
}

/* fully specified random rows over few inputs, many rows: coprimality load */
truth_table random_point_table( std::size_t l, unsigned seed )
{
  std::vector<std::string> inputs;
  for ( std::size_t j = 0; j < l; ++j )
    inputs.push_back( "x" + std::to_string( j ) );
  variable_table vars( {}, "z", inputs );
  std::size_t const n = vars.num_vars();

  std::mt19937 rng( seed );
  std::vector<table_row> rows;
  for ( std::size_t p = 0; p < ( std::size_t( 1 ) << l ); ++p )
  {
    table_row row;
    for ( std::size_t j = 0; j < l; ++j )
    {
      auto eq = polynomial::variable( n, vars.input_index( j ) );
      if ( p & ( std::size_t( 1 ) << j ) )
        eq += polynomial::one( n );
      row.equations.push_back( std::move( eq ) );
    }
    auto out = polynomial::variable( n, vars.output_index() );
    if ( rng() & 1u )
      out += polynomial::one( n );
    row.equations.push_back( std::move( out ) );
    rows.push_back( std::move( row ) );
  }
  return truth_table( vars, rows );
}

} // namespace

int main( int argc, char** argv )
{
  bool quick = false;
  for ( int i = 1; i < argc; ++i )
  {
    if ( std::strcmp( argv[i], "--quick" ) == 0 )
      quick = true;
  }

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without openmp\n\n";
#endif

  std::size_t const big_l = quick ? 10 : 18;
  auto const table = synthetic_table( big_l );
  oracle_options opts;

  /* domain enumeration */
  auto t0 = std::chrono::steady_clock::now();
  auto const rep_s = enumerate_domain_serial( table, opts );
  double const enum_serial = seconds( t0 );
  t0 = std::chrono::steady_clock::now();
  auto const rep_p = enumerate_domain( table, opts );
  double const enum_parallel = seconds( t0 );
  report( "enumerate_domain l=" + std::to_string( big_l ), enum_serial, enum_parallel, rep_s == rep_p );

  /* form verification sweep, driven by the synthesized form */
  auto const form = synthesize( table, monomial_order::lex() ).form;
  t0 = std::chrono::steady_clock::now();
  auto const ver_s = verify_form_serial( form, table, opts );
  double const verify_serial = seconds( t0 );
  t0 = std::chrono::steady_clock::now();
  auto const ver_p = verify_form( form, table, opts );
  double const verify_parallel = seconds( t0 );
  report( "verify_form l=" + std::to_string( big_l ), verify_serial, verify_parallel,
          ver_s.pass == ver_p.pass && ver_s.points_checked == ver_p.points_checked );
  if ( !ver_s.pass )
    std::cout << "  (verification itself failed; engine bug)\n";

  /* completion sweep on a partial table */
  {
    std::size_t const l = quick ? 8 : 12;
    auto part = synthetic_table( l );
    std::vector<table_row> rows = part.rows();
    rows.pop_back(); /* leave one guard block unconstrained */
    truth_table partial( part.vars(), std::move( rows ) );
    oracle_options copts;
    copts.dont_care_cap = 1u << ( l - 2 );
    t0 = std::chrono::steady_clock::now();
    auto const md_s = minimal_completion_multidegree_serial( partial, monomial_order::lex(), copts );
    double const comp_serial = seconds( t0 );
    t0 = std::chrono::steady_clock::now();
    auto const md_p = minimal_completion_multidegree( partial, monomial_order::lex(), copts );
    double const comp_parallel = seconds( t0 );
    report( "completion_sweep l=" + std::to_string( l ) + " d=" + std::to_string( 1u << ( l - 2 ) ), comp_serial,
            comp_parallel, md_s == md_p );
  }

  /* pairwise coprimality: many small Groebner runs */
  {
    auto const pt = random_point_table( quick ? 4 : 5, 42 );
    t0 = std::chrono::steady_clock::now();
    auto const cop_s = check_pairwise_coprime( pt, monomial_order::lex(), {}, /*parallel=*/false );
    double const cop_serial = seconds( t0 );
    t0 = std::chrono::steady_clock::now();
    auto const cop_p = check_pairwise_coprime( pt, monomial_order::lex(), {}, /*parallel=*/true );
    double const cop_parallel = seconds( t0 );
    report( "pairwise_coprime rows=" + std::to_string( pt.num_rows() ), cop_serial, cop_parallel,
            cop_s.all_coprime == cop_p.all_coprime );
  }

  return 0;
}
