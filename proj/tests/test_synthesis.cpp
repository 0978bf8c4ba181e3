#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbsynth/bool_expr.hpp"
#include "gbsynth/errors.hpp"
#include "gbsynth/poly_io.hpp"
#include "gbsynth/synthesis.hpp"
#include "gbsynth/table_format.hpp"

#include <algorithm>
#include <random>

using namespace gbsynth;

namespace
{

polynomial p( variable_table const& vars, std::string const& text )
{
  return parse_polynomial( text, vars );
}

truth_table load_alu( std::string const& output = "c2" )
{
  auto const doc = load_table_document( std::string( GBSYNTH_FIXTURES_DIR ) + "/alu.tt" );
  return build_truth_table( doc, output );
}

bool same_elements( std::vector<polynomial> a, std::vector<polynomial> b )
{
  std::sort( a.begin(), a.end() );
  std::sort( b.begin(), b.end() );
  return a == b;
}

/* z is the output, x the only input */
truth_table single_row_zx()
{
  variable_table vars( {}, "z", { "x" } );
  return truth_table( vars, { table_row{ { p( vars, "z + x" ) } } } );
}

std::size_t count_field_polynomials( std::vector<polynomial> const& polys )
{
  return std::size_t( std::count_if( polys.begin(), polys.end(), []( auto const& q ) { return is_field_polynomial( q ); } ) );
}

} // namespace

TEST_CASE( "bool_to_poly rewrites complements and disjunctions" )
{
  variable_table vars( {}, "x", { "y", "z" } );
  auto const x = bool_expr::variable( "x" );
  auto const y = bool_expr::variable( "y" );
  auto const z = bool_expr::variable( "z" );

  CHECK( bool_to_poly( *bool_expr::make_not( x ), vars ) == p( vars, "x + 1" ) );
  CHECK( bool_to_poly( *bool_expr::make_or( x, y ), vars ) == p( vars, "x + y + x*y" ) );
  CHECK( bool_to_poly( *bool_expr::make_or( bool_expr::make_or( x, y ), z ), vars ) ==
         p( vars, "x + y + z + x*y + x*z + y*z + x*y*z" ) );
  CHECK( bool_to_poly( *bool_expr::make_xor( x, bool_expr::constant( true ) ), vars ) == p( vars, "x + 1" ) );
  CHECK( bool_to_poly( *bool_expr::make_and( x, x ), vars ) == p( vars, "x^2" ) );
  CHECK_THROWS_AS( bool_to_poly( *bool_expr::variable( "w" ), vars ), parse_error );
}

TEST_CASE( "expression grammar" )
{
  variable_table vars( {}, "z", { "x", "y" } );
  auto const to_poly = [&]( std::string const& s ) { return bool_to_poly( *parse_bool_expr( s ), vars ); };

  CHECK( to_poly( "!x" ) == p( vars, "x + 1" ) );
  CHECK( to_poly( "x | y" ) == p( vars, "x + y + x*y" ) );
  CHECK( to_poly( "x ^ y" ) == p( vars, "x + y" ) );
  CHECK( to_poly( "x ^ 2" ) == p( vars, "x^2" ) );
  /* A | B with A = x*y, B = (x+1)(y+1): A + B + A*B, exponents kept */
  CHECK( to_poly( "x & y | !x & !y" ) == p( vars, "x + y + 1 + x^2*y^2 + x^2*y + x*y^2 + x*y" ) );
  CHECK( to_poly( "(x + 1)*(y + 1)" ) == p( vars, "x*y + x + y + 1" ) );
  CHECK_THROWS_AS( parse_bool_expr( "x + " ), parse_error );
  CHECK_THROWS_AS( parse_bool_expr( "(x" ), parse_error );
}

TEST_CASE( "row_ideal adds exactly the field polynomials" )
{
  variable_table vars( {}, "x", { "y" } );
  auto const i = row_ideal( table_row{ {} }, vars );
  CHECK( same_elements( i.generators(), { p( vars, "x^2 + x" ), p( vars, "y^2 + y" ) } ) );
}

TEST_CASE( "ALU smallest-with-equal-operands row ideal, 17 generators" )
{
  auto const table = load_alu();
  auto const& vars = table.vars();
  auto const i = row_ideal( table.rows()[14], vars );

  std::vector<polynomial> expected;
  for ( auto const* text : { "OP0 + 1", "OP1", "a2 + b2", "a1 + b1", "a0 + b0", "c2 + a2" } )
    expected.push_back( p( vars, text ) );
  for ( auto const* name :
        { "carry0", "carry1", "c2", "OP0", "OP1", "a2", "a1", "a0", "b2", "b1", "b0" } )
    expected.push_back( p( vars, std::string( name ) + "^2 + " + name ) );

  CHECK( i.generators().size() == 17 );
  CHECK( same_elements( i.generators(), expected ) );
}

TEST_CASE( "ALU largest-with-a2-winning row ideal matches its listing" )
{
  auto const table = load_alu();
  auto const& vars = table.vars();
  auto const i = row_ideal( table.rows()[1], vars );

  std::vector<polynomial> expected;
  for ( auto const* text : { "OP0", "OP1 + 1", "a2 + 1", "b2", "c2 + a2" } )
    expected.push_back( p( vars, text ) );
  for ( auto const* name :
        { "carry0", "carry1", "c2", "OP0", "OP1", "a2", "a1", "a0", "b2", "b1", "b0" } )
    expected.push_back( p( vars, std::string( name ) + "^2 + " + name ) );

  CHECK( i.generators().size() == 16 );
  CHECK( same_elements( i.generators(), expected ) );
}

TEST_CASE( "ALU sum row keeps the carry chain and drops other outputs" )
{
  auto const table = load_alu();
  auto const& vars = table.vars();
  auto const& eqs = table.rows()[0].equations;
  REQUIRE( eqs.size() == 5 );

  std::vector<polynomial> expected{
      p( vars, "OP0 + 1" ), p( vars, "OP1 + 1" ), p( vars, "c2 + a2 + b2 + carry1" ),
      p( vars, "carry1 + a1*b1*carry0 + a1^2*b1^2*carry0 + a1^2*b1*carry0^2 + a1*b1^2*carry0^2 + a1*b1 + "
               "a1*carry0 + b1*carry0" ),
      p( vars, "carry0 + a0*b0" ) };
  CHECK( same_elements( eqs, expected ) );
}

TEST_CASE( "single-row table: basis and form" )
{
  auto const table = single_row_zx();
  auto const lex = monomial_order::lex();
  auto const basis = assemble_ideal( table, lex );
  auto const& vars = table.vars();
  CHECK( same_elements( basis.elements, { p( vars, "z + x" ), p( vars, "x^2 + x" ) } ) );

  auto const form = extract_polynomial_form( basis, vars );
  CHECK( form.poly == p( vars, "z + x" ) );
  CHECK( form.output_var == "z" );
  CHECK( form.input_tail( vars ) == p( vars, "x" ) );
}

TEST_CASE( "ALU c2: reduced basis shape" )
{
  auto const table = load_alu();
  auto const lex = monomial_order::lex();
  synthesis_stats stats;
  std::vector<std::size_t> excluded;
  auto const basis = assemble_ideal( table, lex, {}, &stats, &excluded );

  CHECK( excluded == std::vector<std::size_t>{ 16 } );
  CHECK( basis.reduced );
  CHECK( basis.elements.size() == 14 );
  CHECK( count_field_polynomials( basis.elements ) == 10 );

  auto const slice = eliminate_intermediates( basis, table.vars() );
  CHECK( slice.size() == 10 );
  CHECK( count_field_polynomials( slice ) == 8 );

  /* the two informative eliminated elements */
  auto const form = extract_polynomial_form( basis, table.vars() );
  bool found_indicator = false;
  for ( auto const& q : slice )
  {
    if ( q == p( table.vars(), "OP0*OP1 + OP0 + OP1 + 1" ) )
      found_indicator = true;
  }
  CHECK( found_indicator );
  CHECK( form.poly.term_count() == 14 );
}

TEST_CASE( "ALU c2 golden form" )
{
  auto const table = load_alu();
  auto const result = synthesize( table, monomial_order::lex() );
  auto const& vars = table.vars();
  CHECK( result.form.poly ==
         p( vars, "c2 + OP1*a0*b0*b1 + OP1*a1*b1 + OP1*a2 + OP1*a0*b0*a1 + OP1*a2*b2 + OP1*b2 + OP0*a1*b1 + "
                  "OP0*a0*b0*b1 + OP0*a0*b0*a1 + OP0*a2*b2 + a0*b0*b1 + a1*b1 + a0*b0*a1" ) );
  CHECK( result.excluded_rows == std::vector<std::size_t>{ 16 } );
  CHECK( result.form.poly.is_multilinear() );
  CHECK( result.eliminated_basis.size() == 10 );
}

TEST_CASE( "fully specified XOR table" )
{
  variable_table vars( {}, "z", { "x", "y" } );
  std::vector<table_row> rows;
  for ( unsigned m = 0; m < 4; ++m )
  {
    table_row row;
    row.equations.push_back( p( vars, ( m & 1 ) ? "x + 1" : "x" ) );
    row.equations.push_back( p( vars, ( m & 2 ) ? "y + 1" : "y" ) );
    row.equations.push_back( p( vars, "z + x + y" ) );
    rows.push_back( std::move( row ) );
  }
  auto const result = synthesize( truth_table( vars, rows ), monomial_order::lex() );
  CHECK( result.form.poly == p( vars, "z + x + y" ) );
}

TEST_CASE( "constant-one output still has the output as leading term" )
{
  variable_table vars( {}, "z", { "x" } );
  std::vector<table_row> rows;
  rows.push_back( table_row{ { p( vars, "x" ), p( vars, "z + 1" ) } } );
  rows.push_back( table_row{ { p( vars, "x + 1" ), p( vars, "z + 1" ) } } );
  auto const result = synthesize( truth_table( vars, rows ), monomial_order::lex() );
  CHECK( result.form.poly == p( vars, "z + 1" ) );
}

TEST_CASE( "contradictory rows raise a coprimality violation" )
{
  variable_table vars( {}, "z", { "x" } );
  std::vector<table_row> rows;
  rows.push_back( table_row{ { p( vars, "x" ), p( vars, "z" ) } } );
  rows.push_back( table_row{ { p( vars, "x" ), p( vars, "z + 1" ) } } );
  CHECK_THROWS_AS( synthesize( truth_table( vars, rows ), monomial_order::lex() ), coprimality_violation );
}

TEST_CASE( "duplicated rows raise a coprimality violation" )
{
  variable_table vars( {}, "z", { "x" } );
  table_row const row{ { p( vars, "x" ), p( vars, "z + x" ) } };
  CHECK_THROWS_AS( synthesize( truth_table( vars, { row, row } ), monomial_order::lex() ), coprimality_violation );
}

TEST_CASE( "a table that never pins the output has no form" )
{
  variable_table vars( {}, "z", { "x" } );
  /* z*x = 0 mentions z but leaves it free at x = 0 */
  truth_table const table( vars, { table_row{ { p( vars, "z*x" ) } } } );
  CHECK_THROWS_AS( synthesize( table, monomial_order::lex() ), no_form_error );
}

TEST_CASE( "check_disjoint_inputs" )
{
  auto const alu = load_alu();
  CHECK( check_disjoint_inputs( alu ).disjoint );

  variable_table vars( {}, "z", { "x", "y" } );
  table_row const row{ { p( vars, "x" ), p( vars, "z + y" ) } };
  auto const rep = check_disjoint_inputs( truth_table( vars, { row, row } ) );
  CHECK( !rep.disjoint );
  REQUIRE( rep.witness.has_value() );
  CHECK( rep.witness->row_a == 1 );
  CHECK( rep.witness->row_b == 2 );
  CHECK( rep.witness->inputs == std::vector<gf2>{ 0, 0 } );

  std::vector<table_row> guarded;
  guarded.push_back( table_row{ { p( vars, "x" ), p( vars, "z" ) } } );
  guarded.push_back( table_row{ { p( vars, "x + 1" ), p( vars, "z + 1" ) } } );
  CHECK( check_disjoint_inputs( truth_table( vars, guarded ) ).disjoint );

  CHECK_THROWS_AS( check_disjoint_inputs( alu, 4 ), cap_exceeded_error );
}

TEST_CASE( "pairwise coprimality of the ALU rows, serial equals parallel" )
{
  auto const alu = load_alu();
  auto const lex = monomial_order::lex();
  auto const serial = check_pairwise_coprime( alu, lex, {}, false );
  auto const parallel = check_pairwise_coprime( alu, lex, {}, true );
  CHECK( serial.all_coprime );
  CHECK( parallel.all_coprime );
}

TEST_CASE( "fold order does not change the form" )
{
  auto const table = load_alu();
  auto const lex = monomial_order::lex();
  auto const reference = synthesize( table, lex ).form.poly;

  std::mt19937 rng( 3 );
  auto rows = table.rows();
  std::shuffle( rows.begin(), rows.end(), rng );
  auto const shuffled = synthesize( truth_table( table.vars(), rows ), lex ).form.poly;
  CHECK( shuffled == reference );
}

TEST_CASE( "block elimination order also yields a valid form" )
{
  auto const table = load_alu();
  auto const ord = elimination_block_order( table.vars() );
  CHECK( ord.split() == 3 );
  auto const result = synthesize( table, ord );
  CHECK( result.form.poly.is_multilinear() );
  CHECK( result.form.poly.leading_term( ord ) ==
         monomial::variable( table.vars().num_vars(), table.vars().output_index() ) );
}

TEST_CASE( "form validation rejects malformed polynomials" )
{
  variable_table vars( { "t" }, "z", { "x" } );
  auto const lex = monomial_order::lex();
  CHECK_THROWS_AS( make_polynomial_form( p( vars, "x + 1" ), vars, lex ), std::invalid_argument );
  CHECK_THROWS_AS( make_polynomial_form( p( vars, "z + t" ), vars, lex ), std::invalid_argument );
  CHECK_THROWS_AS( make_polynomial_form( p( vars, "z + x^2" ), vars, lex ), std::invalid_argument );
  CHECK_THROWS_AS( make_polynomial_form( polynomial::zero( 3 ), vars, lex ), std::invalid_argument );
}
