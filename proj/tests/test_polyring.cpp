#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbsynth/errors.hpp"
#include "gbsynth/poly_io.hpp"
#include "gbsynth/polynomial.hpp"
#include "gbsynth/variable_table.hpp"

#include <random>

using namespace gbsynth;

namespace
{

/* x > y > z under lex */
variable_table xyz()
{
  return variable_table( {}, "x", { "y", "z" } );
}

polynomial p( variable_table const& vars, std::string const& text )
{
  return parse_polynomial( text, vars );
}

polynomial random_poly( variable_table const& vars, std::mt19937& rng, unsigned max_terms = 5 )
{
  std::size_t const n = vars.num_vars();
  std::uniform_int_distribution<unsigned> term_count( 0, max_terms );
  std::uniform_int_distribution<unsigned> exp( 0, 2 );
  std::vector<monomial> terms;
  auto const count = term_count( rng );
  for ( unsigned t = 0; t < count; ++t )
  {
    std::vector<monomial::exponent_type> e( n );
    for ( auto& x : e )
      x = static_cast<monomial::exponent_type>( exp( rng ) );
    terms.emplace_back( std::move( e ) );
  }
  return polynomial::from_terms( n, std::move( terms ) );
}

monomial random_monomial( std::size_t n, std::mt19937& rng )
{
  std::uniform_int_distribution<unsigned> exp( 0, 2 );
  std::vector<monomial::exponent_type> e( n );
  for ( auto& x : e )
    x = static_cast<monomial::exponent_type>( exp( rng ) );
  return monomial( std::move( e ) );
}

} // namespace

TEST_CASE( "variable table fixes roster order and validates names" )
{
  variable_table vars( { "carry" }, "z", { "a", "b" } );
  CHECK( vars.num_vars() == 4 );
  CHECK( vars.num_intermediates() == 1 );
  CHECK( vars.num_inputs() == 2 );
  CHECK( vars.output_index() == 1 );
  CHECK( vars.name( 0 ) == "carry" );
  CHECK( vars.name( 1 ) == "z" );
  CHECK( vars.role( 3 ) == var_role::input );
  CHECK( vars.index_of( "b" ) == 3 );
  CHECK( !vars.index_of( "missing" ) );

  CHECK_THROWS_AS( variable_table( {}, "z", { "z" } ), std::invalid_argument );
  CHECK_THROWS_AS( variable_table( {}, "2z", {} ), std::invalid_argument );
  CHECK_THROWS_AS( variable_table( {}, "", { "a" } ), std::invalid_argument );
}

TEST_CASE( "compare: lex puts x^2 above x*y" )
{
  auto const vars = xyz();
  auto const lex = monomial_order::lex();
  CHECK( compare( p( vars, "x^2" ).terms()[0], p( vars, "x*y" ).terms()[0], lex ) > 0 );
}

TEST_CASE( "compare: identical monomials are equal under any order" )
{
  auto const vars = xyz();
  auto const m = p( vars, "x*y^2*z" ).terms()[0];
  for ( auto const& ord : { monomial_order::lex(), monomial_order::grlex(), monomial_order::block( 1 ) } )
    CHECK( compare( m, m, ord ) == 0 );
}

TEST_CASE( "compare: block order puts the first block first" )
{
  /* roster (z; a, b), z alone in the first block */
  variable_table vars( {}, "z", { "a", "b" } );
  auto const ord = monomial_order::block( 1 );
  auto const ab = p( vars, "a*b" ).terms()[0];
  auto const z = p( vars, "z" ).terms()[0];
  CHECK( compare( ab, z, ord ) < 0 );
}

TEST_CASE( "compare: dimension mismatch is an error" )
{
  CHECK_THROWS_AS( compare( monomial( 2 ), monomial( 3 ), monomial_order::lex() ), std::invalid_argument );
}

TEST_CASE( "add: characteristic two" )
{
  auto const vars = xyz();
  auto const f = p( vars, "x + y + x*y" );
  CHECK( ( f + f ).is_zero() );
  CHECK( p( vars, "x + 1" ) + p( vars, "x" ) == p( vars, "1" ) );
  CHECK( p( vars, "x + y + x*y" ) + p( vars, "x + y" ) == p( vars, "x*y" ) );
}

TEST_CASE( "multiply: cross terms cancel over GF(2)" )
{
  auto const vars = xyz();
  CHECK( p( vars, "x + 1" ) * p( vars, "x + 1" ) == p( vars, "x^2 + 1" ) );
  CHECK( p( vars, "x + 1" ) * p( vars, "y + 1" ) == p( vars, "x*y + x + y + 1" ) );
  CHECK( p( vars, "x" ) * p( vars, "y + 1" ) == p( vars, "x*y + x" ) );
}

TEST_CASE( "normal_form examples" )
{
  auto const vars = xyz();
  auto const lex = monomial_order::lex();
  std::vector<polynomial> const d1{ p( vars, "x^2 + x" ) };
  CHECK( normal_form( p( vars, "x^2 + x" ), d1, lex ).is_zero() );
  CHECK( normal_form( p( vars, "x^2" ), d1, lex ) == p( vars, "x" ) );

  std::vector<polynomial> const d2{ p( vars, "x + 1" ) };
  CHECK( normal_form( p( vars, "x*y + y" ), d2, lex ).is_zero() );

  std::vector<polynomial> const dz{ polynomial::zero( 3 ) };
  CHECK_THROWS_AS( normal_form( p( vars, "x" ), dz, lex ), std::invalid_argument );
}

TEST_CASE( "normal_form reduces by the first eligible divisor" )
{
  auto const vars = xyz();
  auto const lex = monomial_order::lex();
  /* both leading terms divide x*y; the remainder depends on the list order */
  std::vector<polynomial> const ab{ p( vars, "x" ), p( vars, "x + y" ) };
  std::vector<polynomial> const ba{ p( vars, "x + y" ), p( vars, "x" ) };
  CHECK( normal_form( p( vars, "x*y" ), ab, lex ).is_zero() );
  CHECK( normal_form( p( vars, "x*y" ), ba, lex ) == p( vars, "y^2" ) );
}

TEST_CASE( "evaluate basics" )
{
  auto const vars = xyz();
  auto const f = p( vars, "x*y + y*z + x" );
  std::vector<gf2> const zeros{ 0, 0, 0 };
  CHECK( f.evaluate( zeros ) == 0 );

  auto const g = p( vars, "x + 1" );
  std::vector<gf2> const x1{ 1, 0, 0 };
  CHECK( g.evaluate( x1 ) == 0 );

  std::vector<gf2> const wrong_size{ 0, 0 };
  CHECK_THROWS_AS( f.evaluate( wrong_size ), std::invalid_argument );
}

TEST_CASE( "leading_term examples" )
{
  auto const vars = xyz();
  auto const lex = monomial_order::lex();
  CHECK( p( vars, "x + 1" ).leading_term( lex ) == p( vars, "x" ).terms()[0] );
  CHECK( p( vars, "x*y + x + y" ).leading_term( lex ) == p( vars, "x*y" ).terms()[0] );
  CHECK_THROWS_AS( polynomial::zero( 3 ).leading_term( lex ), std::domain_error );
}

TEST_CASE( "exponent overflow is a hard error" )
{
  monomial const big = monomial::variable( 1, 0, 255 );
  CHECK_THROWS_AS( big.times( monomial::variable( 1, 0, 1 ) ), std::overflow_error );
}

TEST_CASE( "ring laws on random polynomials" )
{
  auto const vars = xyz();
  std::mt19937 rng( 7 );
  for ( int it = 0; it < 200; ++it )
  {
    auto const a = random_poly( vars, rng );
    auto const b = random_poly( vars, rng );
    auto const c = random_poly( vars, rng );
    CHECK( ( a + a ).is_zero() );
    CHECK( a + polynomial::zero( 3 ) == a );
    CHECK( a + b == b + a );
    CHECK( a * b == b * a );
    CHECK( ( a * b ) * c == a * ( b * c ) );
    CHECK( a * ( b + c ) == a * b + a * c );
  }
}

TEST_CASE( "orders are total, multiplicative, with 1 minimal" )
{
  std::mt19937 rng( 11 );
  std::size_t const n = 3;
  auto const one = monomial( n );
  for ( auto const& ord : { monomial_order::lex(), monomial_order::grlex(), monomial_order::block( 1 ),
                            monomial_order::block( 2 ) } )
  {
    for ( int it = 0; it < 300; ++it )
    {
      auto const a = random_monomial( n, rng );
      auto const b = random_monomial( n, rng );
      auto const t = random_monomial( n, rng );

      /* total: exactly one of <, ==, > holds, and == iff identical */
      auto const c = compare( a, b, ord );
      CHECK( ( c == 0 ) == ( a == b ) );
      auto const r = compare( b, a, ord );
      CHECK( ( c > 0 ) == ( r < 0 ) );
      CHECK( ( c < 0 ) == ( r > 0 ) );

      /* multiplicative */
      if ( c > 0 )
        CHECK( compare( a.times( t ), b.times( t ), ord ) > 0 );

      /* transitive on a sampled triple */
      if ( compare( a, b, ord ) >= 0 && compare( b, t, ord ) >= 0 )
        CHECK( compare( a, t, ord ) >= 0 );

      /* 1 minimal */
      CHECK( compare( a, one, ord ) >= 0 );
    }
  }
}

TEST_CASE( "single-divisor membership reduces to zero" )
{
  auto const vars = xyz();
  auto const lex = monomial_order::lex();
  std::mt19937 rng( 23 );
  for ( int it = 0; it < 200; ++it )
  {
    auto const g = random_poly( vars, rng );
    auto const h = random_poly( vars, rng );
    if ( g.is_zero() )
      continue;
    std::vector<polynomial> const divs{ g };
    CHECK( normal_form( h * g, divs, lex ).is_zero() );
  }
}

TEST_CASE( "evaluate is a ring morphism at every point" )
{
  auto const vars = xyz();
  std::mt19937 rng( 31 );
  for ( int it = 0; it < 100; ++it )
  {
    auto const a = random_poly( vars, rng );
    auto const b = random_poly( vars, rng );
    for ( unsigned mask = 0; mask < 8; ++mask )
    {
      std::vector<gf2> const pt{ gf2( mask & 1 ), gf2( ( mask >> 1 ) & 1 ), gf2( ( mask >> 2 ) & 1 ) };
      CHECK( ( a + b ).evaluate( pt ) == ( a.evaluate( pt ) ^ b.evaluate( pt ) ) );
      CHECK( ( a * b ).evaluate( pt ) == ( a.evaluate( pt ) & b.evaluate( pt ) ) );
    }
  }
}

TEST_CASE( "printing and parsing round trip" )
{
  auto const vars = xyz();
  auto const lex = monomial_order::lex();
  std::mt19937 rng( 47 );
  for ( int it = 0; it < 200; ++it )
  {
    auto const a = random_poly( vars, rng );
    CHECK( parse_polynomial( to_string( a, vars, lex ), vars ) == a );
  }
  CHECK( to_string( polynomial::zero( 3 ), vars, lex ) == "0" );
  CHECK( to_string( p( vars, "x^2*y + 1" ), vars, lex ) == "x^2*y + 1" );
}

TEST_CASE( "polynomial grammar rejects malformed input" )
{
  auto const vars = xyz();
  CHECK_THROWS_AS( parse_polynomial( "", vars ), parse_error );
  CHECK_THROWS_AS( parse_polynomial( "x +", vars ), parse_error );
  CHECK_THROWS_AS( parse_polynomial( "w", vars ), parse_error );
  CHECK_THROWS_AS( parse_polynomial( "x * * y", vars ), parse_error );
  CHECK_THROWS_AS( parse_polynomial( "0 + x", vars ), parse_error );
  CHECK_THROWS_AS( parse_polynomial( "x ^ y", vars ), parse_error );
}
