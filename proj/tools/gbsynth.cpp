/* Command-line frontend: synthesize, verify, evaluate, check.
   Deterministic results go to stdout; timing and diagnostics to stderr. */

#include "gbsynth/errors.hpp"
#include "gbsynth/oracle.hpp"
#include "gbsynth/poly_io.hpp"
#include "gbsynth/synthesis.hpp"
#include "gbsynth/table_format.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

/* exit codes, also documented in the README */
constexpr int exit_verify_failed = 1;
constexpr int exit_parse_error = 10;
constexpr int exit_coprimality = 11;
constexpr int exit_no_form = 12;
constexpr int exit_resource_limit = 13;
constexpr int exit_cap_exceeded = 14;

struct common_options
{
  std::string order = "lex";
  std::vector<std::string> var_order;
  std::size_t input_cap = 24;
  std::size_t dont_care_cap = 12;
  std::size_t max_basis = 10000;
  std::size_t max_terms = 1000000;
};

gbsynth::monomial_order pick_order( std::string const& name, gbsynth::variable_table const& vars )
{
  if ( name == "lex" )
    return gbsynth::monomial_order::lex();
  if ( name == "block" )
    return gbsynth::elimination_block_order( vars );
  throw gbsynth::parse_error( "unknown order '" + name + "' (expected lex or block)" );
}

gbsynth::synthesis_options synth_options( common_options const& c )
{
  gbsynth::synthesis_options opts;
  opts.input_enumeration_cap = c.input_cap;
  opts.buchberger.max_basis_size = c.max_basis;
  opts.buchberger.max_term_count = c.max_terms;
  return opts;
}

/* `--form` accepts a literal polynomial/equation or a file holding one */
std::string read_form_argument( std::string const& arg )
{
  if ( std::filesystem::exists( arg ) )
  {
    std::ifstream in( arg );
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

/* accepts `out = tail` or a bare polynomial containing the output variable */
gbsynth::polynomial parse_form_text( std::string const& text, gbsynth::variable_table const& vars )
{
  auto const eq = text.find( '=' );
  if ( eq == std::string::npos )
    return gbsynth::parse_polynomial( text, vars );
  auto const lhs = gbsynth::parse_polynomial( text.substr( 0, eq ), vars );
  auto const rhs = gbsynth::parse_polynomial( text.substr( eq + 1 ), vars );
  return lhs + rhs;
}

unsigned and_gate_count( gbsynth::polynomial const& tail )
{
  unsigned count = 0;
  for ( auto const& t : tail.terms() )
  {
    unsigned vars_in_term = 0;
    for ( std::size_t i = 0; i < t.num_vars(); ++i )
      vars_in_term += t.exponent( i ) != 0 ? 1u : 0u;
    if ( vars_in_term > 1 )
      count += vars_in_term - 1;
  }
  return count;
}

int run_synth( std::string const& path, std::string const& output, common_options const& copt, bool stats )
{
  auto const doc = gbsynth::load_table_document( path );
  auto const table = gbsynth::build_truth_table( doc, output, copt.var_order );
  auto const ord = pick_order( copt.order, table.vars() );

  auto const result = gbsynth::synthesize( table, ord, synth_options( copt ) );

  for ( auto const row : result.excluded_rows )
  {
    std::cerr << "note: row " << row << " does not constrain output '" << table.vars().output_name()
              << "'; excluded as don't care\n";
  }

  auto const tail = result.form.input_tail( table.vars() );
  std::cout << result.form.output_var << " = " << to_string( tail, table.vars(), ord ) << '\n';

  std::size_t field_count = 0;
  for ( auto const& p : result.eliminated_basis )
    field_count += gbsynth::is_field_polynomial( p ) ? 1u : 0u;
  std::cout << "eliminated basis: " << result.eliminated_basis.size() << " polynomials (" << field_count
            << " field polynomials omitted below)\n";
  for ( auto const& p : result.eliminated_basis )
  {
    if ( !gbsynth::is_field_polynomial( p ) )
      std::cout << "  " << to_string( p, table.vars(), ord ) << '\n';
  }
  std::cout << "input terms: " << tail.term_count() << '\n';
  std::cout << "xor gates: " << ( tail.term_count() == 0 ? 0 : tail.term_count() - 1 ) << '\n';
  std::cout << "and gates: " << and_gate_count( tail ) << '\n';

  std::cerr << "time: " << result.stats.wall_ms / 1000.0 << " s\n";
  if ( stats )
  {
    std::cerr << "basis size: " << result.full_basis.elements.size() << '\n';
    std::cerr << "s-pairs formed: " << result.stats.pair_count << '\n';
    std::cerr << "division steps: " << result.stats.reduction_count << '\n';
  }
  return 0;
}

int run_verify( std::string const& path, std::string const& form_arg, std::string const& output,
                common_options const& copt )
{
  auto const doc = gbsynth::load_table_document( path );
  auto const form_text = read_form_argument( form_arg );

  /* the form's variables decide which declared output it is for */
  std::string selected = output;
  if ( selected.empty() )
  {
    for ( auto const& out : doc.outputs )
    {
      if ( form_text.find( out ) != std::string::npos )
      {
        selected = out;
        break;
      }
    }
  }

  auto const table = gbsynth::build_truth_table( doc, selected, copt.var_order );
  auto const ord = pick_order( copt.order, table.vars() );
  auto const poly = parse_form_text( form_text, table.vars() );
  auto const form = gbsynth::make_polynomial_form( poly, table.vars(), ord );

  gbsynth::oracle_options oopts;
  oopts.input_cap = copt.input_cap;
  oopts.dont_care_cap = copt.dont_care_cap;
  auto const rep = gbsynth::verify_form( form, table, oopts );

  std::cout << "domain size: " << rep.domain_size << '\n';
  std::cout << "points checked: " << rep.points_checked << '\n';
  if ( rep.pass )
  {
    std::cout << "result: PASS\n";
    return 0;
  }
  std::cout << "result: FAIL\n";
  std::cout << "first failure:";
  for ( std::size_t j = 0; j < rep.first_failure->size(); ++j )
    std::cout << ' ' << table.vars().name( table.vars().input_index( j ) ) << '=' << int( ( *rep.first_failure )[j] );
  std::cout << '\n';
  return exit_verify_failed;
}

int run_eval( std::string const& form_text, std::vector<std::string> const& assignments )
{
  /* roster from the identifiers of the form, in order of appearance */
  std::vector<std::string> names;
  for ( std::size_t i = 0; i < form_text.size(); )
  {
    if ( std::isalpha( static_cast<unsigned char>( form_text[i] ) ) || form_text[i] == '_' )
    {
      std::size_t j = i;
      while ( j < form_text.size() &&
              ( std::isalnum( static_cast<unsigned char>( form_text[j] ) ) || form_text[j] == '_' ) )
        ++j;
      auto const name = form_text.substr( i, j - i );
      if ( std::find( names.begin(), names.end(), name ) == names.end() )
        names.push_back( name );
      i = j;
    }
    else
    {
      ++i;
    }
  }
  if ( names.empty() )
    throw gbsynth::parse_error( "form mentions no variables" );

  std::map<std::string, gbsynth::gf2> values;
  for ( auto const& a : assignments )
  {
    auto const eq = a.find( '=' );
    if ( eq == std::string::npos )
      throw gbsynth::parse_error( "expected var=0 or var=1, got '" + a + "'" );
    auto const name = a.substr( 0, eq );
    auto const value = a.substr( eq + 1 );
    if ( value != "0" && value != "1" )
      throw gbsynth::parse_error( "expected var=0 or var=1, got '" + a + "'" );
    values[name] = value == "1" ? 1 : 0;
  }

  /* unassigned variables: at most one, treated as the output being solved for */
  std::vector<std::string> unassigned;
  for ( auto const& n : names )
  {
    if ( !values.count( n ) )
      unassigned.push_back( n );
  }
  if ( unassigned.size() > 1 )
  {
    throw gbsynth::parse_error( "assignment misses more than one variable (first two: '" + unassigned[0] + "', '" +
                                unassigned[1] + "')" );
  }

  gbsynth::variable_table vars( {}, unassigned.empty() ? names.front() : unassigned.front(),
                                [&] {
                                  std::vector<std::string> rest;
                                  auto const& out = unassigned.empty() ? names.front() : unassigned.front();
                                  for ( auto const& n : names )
                                  {
                                    if ( n != out )
                                      rest.push_back( n );
                                  }
                                  return rest;
                                }() );
  auto poly = parse_form_text( form_text, vars );

  if ( unassigned.empty() )
  {
    /* full assignment: plain evaluation */
    std::vector<gbsynth::gf2> point( vars.num_vars(), 0 );
    for ( auto const& [name, v] : values )
    {
      if ( auto idx = vars.index_of( name ) )
        point[*idx] = v;
    }
    std::cout << int( poly.evaluate( point ) ) << '\n';
    return 0;
  }

  /* solve `out + tail = 0` for out: the unassigned variable must occur as a
     lone linear term */
  auto const out_idx = vars.output_index();
  auto const out_mono = gbsynth::monomial::variable( vars.num_vars(), out_idx );
  bool found = false;
  std::vector<gbsynth::monomial> tail_terms;
  for ( auto const& t : poly.terms() )
  {
    if ( t == out_mono )
    {
      found = true;
      continue;
    }
    if ( t.exponent( out_idx ) != 0 )
      throw gbsynth::parse_error( "variable '" + vars.output_name() + "' does not occur as a lone linear term" );
    tail_terms.push_back( t );
  }
  if ( !found )
    throw gbsynth::parse_error( "variable '" + vars.output_name() + "' is unassigned but absent from the form" );

  auto const tail = gbsynth::polynomial::from_terms( vars.num_vars(), std::move( tail_terms ) );
  std::vector<gbsynth::gf2> point( vars.num_vars(), 0 );
  for ( auto const& [name, v] : values )
  {
    if ( auto idx = vars.index_of( name ) )
      point[*idx] = v;
  }
  std::cout << int( tail.evaluate( point ) ) << '\n';
  return 0;
}

int run_check( std::string const& path, std::string const& output, common_options const& copt )
{
  auto const doc = gbsynth::load_table_document( path );
  auto const table = gbsynth::build_truth_table( doc, output, copt.var_order );
  auto const ord = pick_order( copt.order, table.vars() );

  auto const constrained = table.constrained_rows();
  std::cout << "rows: " << table.num_rows() << " total, " << constrained.size() << " constrain '"
            << table.vars().output_name() << "'\n";

  bool disjoint_known = false, disjoint = false;
  try
  {
    auto const rep = gbsynth::check_disjoint_inputs( table, copt.input_cap );
    disjoint_known = true;
    disjoint = rep.disjoint;
    if ( rep.disjoint )
    {
      std::cout << "disjoint inputs: yes\n";
    }
    else
    {
      std::cout << "disjoint inputs: no (rows " << rep.witness->row_a << " and " << rep.witness->row_b << " share";
      for ( std::size_t j = 0; j < rep.witness->inputs.size(); ++j )
        std::cout << ' ' << table.vars().name( table.vars().input_index( j ) ) << '='
                  << int( rep.witness->inputs[j] );
      std::cout << ")\n";
    }
  }
  catch ( gbsynth::cap_exceeded_error const& )
  {
    std::cout << "disjoint inputs: skipped (too many inputs)\n";
  }

  auto const pairs = constrained.size() * ( constrained.size() - 1 ) / 2;
  auto const rep = gbsynth::check_pairwise_coprime( table, ord, synth_options( copt ).buchberger );
  if ( rep.all_coprime )
  {
    std::cout << "pairwise coprime: yes (" << pairs << " pairs verified)\n";
    if ( disjoint_known && disjoint )
      std::cout << "fast path and Groebner check agree\n";
    return 0;
  }
  std::cout << "pairwise coprime: no (rows " << rep.witness->first << " and " << rep.witness->second << ")\n";
  return exit_coprimality;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Polynomial-form synthesis from truth tables over GF(2)" };
  app.require_subcommand( 1 );

  common_options copt;
  std::string table_path, output_var, form_arg;
  std::vector<std::string> assignments;
  bool stats = false;

  auto const add_common = [&]( CLI::App* cmd, bool with_table ) {
    if ( with_table )
      cmd->add_option( "table", table_path, "truth table file (.tt text or .json)" )->required();
    cmd->add_option( "--order", copt.order, "monomial order: lex or block" )->default_str( "lex" );
    cmd->add_option( "--vars", copt.var_order, "input variable order override (comma separated)" )->delimiter( ',' );
    cmd->add_option( "--input-cap", copt.input_cap, "max inputs for exhaustive scans" );
    cmd->add_option( "--dc-cap", copt.dont_care_cap, "max don't-care points for completion sweeps" );
    cmd->add_option( "--max-basis", copt.max_basis, "basis size cap" );
    cmd->add_option( "--max-terms", copt.max_terms, "per-polynomial term count cap" );
  };

  auto* synth = app.add_subcommand( "synth", "synthesize a polynomial form" );
  add_common( synth, true );
  synth->add_option( "--output", output_var, "output variable (default: first declared)" );
  synth->add_flag( "--stats", stats, "print basis statistics to stderr" );

  auto* verify = app.add_subcommand( "verify", "verify a form against a table exhaustively" );
  add_common( verify, true );
  verify->add_option( "--form", form_arg, "form string ('out = tail' or polynomial) or file" )->required();
  verify->add_option( "--output", output_var, "output variable (default: inferred from the form)" );

  auto* eval = app.add_subcommand( "eval", "evaluate a form at an assignment" );
  eval->add_option( "--form", form_arg, "form string" )->required();
  eval->add_option( "--set", assignments, "variable assignment var=0/1 (repeatable)" );

  auto* check = app.add_subcommand( "check", "disjointness and coprimality report" );
  add_common( check, true );
  check->add_option( "--output", output_var, "output variable (default: first declared)" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( synth->parsed() )
      return run_synth( table_path, output_var, copt, stats );
    if ( verify->parsed() )
      return run_verify( table_path, form_arg, output_var, copt );
    if ( eval->parsed() )
      return run_eval( form_arg, assignments );
    if ( check->parsed() )
      return run_check( table_path, output_var, copt );
  }
  catch ( gbsynth::parse_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse_error;
  }
  catch ( gbsynth::coprimality_violation const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_coprimality;
  }
  catch ( gbsynth::no_form_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no_form;
  }
  catch ( gbsynth::resource_limit_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_resource_limit;
  }
  catch ( gbsynth::cap_exceeded_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_cap_exceeded;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse_error;
  }
  return 0;
}
