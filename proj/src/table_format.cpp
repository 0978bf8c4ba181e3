#include "gbsynth/table_format.hpp"

#include "gbsynth/bool_expr.hpp"
#include "gbsynth/errors.hpp"
#include "gbsynth/poly_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace gbsynth
{

namespace
{

std::string strip( std::string_view s )
{
  auto const from = s.find_first_not_of( " \t\r" );
  if ( from == std::string_view::npos )
    return {};
  auto const to = s.find_last_not_of( " \t\r" );
  return std::string( s.substr( from, to - from + 1 ) );
}

std::vector<std::string> split_names( std::string_view s, std::size_t line )
{
  std::vector<std::string> names;
  std::istringstream in{ std::string( s ) };
  std::string name;
  while ( in >> name )
  {
    if ( !is_identifier( name ) )
      throw parse_error( "invalid identifier '" + name + "'", line );
    names.push_back( name );
  }
  return names;
}

/* split on commas that are not nested in parentheses */
std::vector<std::string> split_equations( std::string_view s )
{
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for ( std::size_t i = 0; i <= s.size(); ++i )
  {
    if ( i == s.size() || ( s[i] == ',' && depth == 0 ) )
    {
      auto part = strip( s.substr( start, i - start ) );
      if ( !part.empty() )
        parts.push_back( std::move( part ) );
      start = i + 1;
    }
    else if ( s[i] == '(' )
    {
      ++depth;
    }
    else if ( s[i] == ')' )
    {
      --depth;
    }
  }
  return parts;
}

} // namespace

table_document parse_table_document( std::string_view text )
{
  table_document doc;
  enum class section
  {
    none,
    inputs,
    output,
    intermediates,
    options,
    row
  };
  section cur = section::none;
  bool seen_inputs = false, seen_output = false, seen_intermediates = false, seen_options = false;

  std::size_t line_no = 0;
  std::istringstream in{ std::string( text ) };
  std::string raw;
  while ( std::getline( in, raw ) )
  {
    ++line_no;
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
      raw.erase( hash );
    auto const line = strip( raw );
    if ( line.empty() )
      continue;

    if ( line.front() == '[' )
    {
      auto const close = line.find( ']' );
      if ( close == std::string::npos )
        throw parse_error( "unterminated section header", line_no );
      auto const name = strip( line.substr( 1, close - 1 ) );
      auto const rest = strip( line.substr( close + 1 ) );
      if ( name == "inputs" )
      {
        if ( seen_inputs )
          throw parse_error( "duplicate [inputs] section", line_no );
        seen_inputs = true;
        cur = section::inputs;
        auto names = split_names( rest, line_no );
        doc.inputs.insert( doc.inputs.end(), names.begin(), names.end() );
      }
      else if ( name == "output" || name == "outputs" )
      {
        if ( seen_output )
          throw parse_error( "duplicate [output] section", line_no );
        seen_output = true;
        cur = section::output;
        auto names = split_names( rest, line_no );
        doc.outputs.insert( doc.outputs.end(), names.begin(), names.end() );
      }
      else if ( name == "intermediates" )
      {
        if ( seen_intermediates )
          throw parse_error( "duplicate [intermediates] section", line_no );
        seen_intermediates = true;
        cur = section::intermediates;
        auto names = split_names( rest, line_no );
        doc.intermediates.insert( doc.intermediates.end(), names.begin(), names.end() );
      }
      else if ( name == "options" )
      {
        if ( seen_options )
          throw parse_error( "duplicate [options] section", line_no );
        seen_options = true;
        cur = section::options;
        if ( !rest.empty() )
          throw parse_error( "unexpected text after [options]", line_no );
      }
      else if ( name == "row" )
      {
        cur = section::row;
        doc.rows.push_back( { {}, line_no } );
        for ( auto& eq : split_equations( rest ) )
          doc.rows.back().equations.push_back( std::move( eq ) );
      }
      else
      {
        throw parse_error( "unknown section '" + name + "'", line_no );
      }
      continue;
    }

    switch ( cur )
    {
    case section::inputs:
    {
      auto names = split_names( line, line_no );
      doc.inputs.insert( doc.inputs.end(), names.begin(), names.end() );
      break;
    }
    case section::output:
    {
      auto names = split_names( line, line_no );
      doc.outputs.insert( doc.outputs.end(), names.begin(), names.end() );
      break;
    }
    case section::intermediates:
    {
      auto names = split_names( line, line_no );
      doc.intermediates.insert( doc.intermediates.end(), names.begin(), names.end() );
      break;
    }
    case section::options:
    {
      auto const eq = line.find( '=' );
      if ( eq == std::string::npos )
        throw parse_error( "expected 'key = value'", line_no );
      auto const key = strip( line.substr( 0, eq ) );
      auto const value = strip( line.substr( eq + 1 ) );
      if ( key.empty() || value.empty() )
        throw parse_error( "expected 'key = value'", line_no );
      if ( !doc.options.emplace( key, value ).second )
        throw parse_error( "duplicate option '" + key + "'", line_no );
      break;
    }
    case section::row:
    {
      for ( auto& eq : split_equations( line ) )
        doc.rows.back().equations.push_back( std::move( eq ) );
      break;
    }
    case section::none:
      throw parse_error( "content before the first section header", line_no );
    }
  }

  if ( doc.outputs.empty() )
    throw parse_error( "missing [output] section" );
  if ( doc.rows.empty() )
    throw parse_error( "table has no [row] sections" );
  return doc;
}

table_document parse_table_document_json( std::string_view text )
{
  nlohmann::json j;
  try
  {
    j = nlohmann::json::parse( text );
  }
  catch ( nlohmann::json::parse_error const& e )
  {
    throw parse_error( std::string( "invalid JSON: " ) + e.what() );
  }

  auto const names_of = []( nlohmann::json const& node, char const* field ) {
    std::vector<std::string> names;
    if ( node.is_string() )
    {
      names.push_back( node.get<std::string>() );
    }
    else if ( node.is_array() )
    {
      for ( auto const& item : node )
      {
        if ( !item.is_string() )
          throw parse_error( std::string( field ) + " must hold strings" );
        names.push_back( item.get<std::string>() );
      }
    }
    else
    {
      throw parse_error( std::string( field ) + " must be a string or an array of strings" );
    }
    for ( auto const& n : names )
    {
      if ( !is_identifier( n ) )
        throw parse_error( "invalid identifier '" + n + "' in " + field );
    }
    return names;
  };

  table_document doc;
  if ( !j.is_object() || !j.contains( "output" ) || !j.contains( "rows" ) )
    throw parse_error( "JSON table needs 'output' and 'rows' fields" );
  if ( j.contains( "inputs" ) )
    doc.inputs = names_of( j["inputs"], "inputs" );
  doc.outputs = names_of( j["output"], "output" );
  if ( j.contains( "intermediates" ) )
    doc.intermediates = names_of( j["intermediates"], "intermediates" );
  if ( j.contains( "options" ) )
  {
    for ( auto const& [key, value] : j["options"].items() )
      doc.options[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  for ( auto const& row : j["rows"] )
  {
    table_document::raw_row rr;
    auto const& eqs = row.is_object() ? row.at( "equations" ) : row;
    if ( !eqs.is_array() )
      throw parse_error( "each row must be an array of equation strings" );
    for ( auto const& eq : eqs )
    {
      if ( !eq.is_string() )
        throw parse_error( "each equation must be a string" );
      for ( auto& part : split_equations( eq.get<std::string>() ) )
        rr.equations.push_back( std::move( part ) );
    }
    doc.rows.push_back( std::move( rr ) );
  }
  if ( doc.rows.empty() )
    throw parse_error( "table has no rows" );
  return doc;
}

table_document load_table_document( std::filesystem::path const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw parse_error( "cannot open '" + path.string() + "'" );
  std::ostringstream buf;
  buf << in.rdbuf();
  if ( path.extension() == ".json" )
    return parse_table_document_json( buf.str() );
  return parse_table_document( buf.str() );
}

namespace
{

/* collect variable names of an expression tree */
void collect_vars( bool_expr const& e, std::vector<std::string>& out )
{
  switch ( e.op )
  {
  case bool_expr::op_t::variable:
    out.push_back( e.var );
    break;
  case bool_expr::op_t::constant:
    break;
  default:
    if ( e.lhs )
      collect_vars( *e.lhs, out );
    if ( e.rhs )
      collect_vars( *e.rhs, out );
  }
}

} // namespace

truth_table build_truth_table( table_document const& doc, std::string_view output,
                               std::vector<std::string> const& input_order )
{
  std::string const selected = output.empty() ? doc.outputs.front() : std::string( output );
  if ( std::find( doc.outputs.begin(), doc.outputs.end(), selected ) == doc.outputs.end() )
    throw parse_error( "'" + selected + "' is not a declared output" );

  std::unordered_set<std::string> declared;
  for ( auto const* list : { &doc.inputs, &doc.outputs, &doc.intermediates } )
  {
    for ( auto const& n : *list )
    {
      if ( !declared.insert( n ).second )
        throw parse_error( "duplicate declaration of '" + n + "'" );
    }
  }
  std::unordered_set<std::string> other_outputs( doc.outputs.begin(), doc.outputs.end() );
  other_outputs.erase( selected );

  auto inputs = doc.inputs;
  if ( !input_order.empty() )
  {
    if ( input_order.size() != inputs.size() ||
         !std::is_permutation( input_order.begin(), input_order.end(), inputs.begin() ) )
      throw parse_error( "input order override must be a permutation of the declared inputs" );
    inputs = input_order;
  }
  variable_table vars( doc.intermediates, selected, inputs );

  std::vector<table_row> rows;
  rows.reserve( doc.rows.size() );
  for ( auto const& rr : doc.rows )
  {
    table_row row;
    for ( auto const& eq_text : rr.equations )
    {
      auto const eq_pos = eq_text.find( '=' );
      bool_expr_ptr lhs, rhs;
      try
      {
        if ( eq_pos == std::string::npos )
        {
          lhs = parse_bool_expr( eq_text );
          rhs = bool_expr::constant( false );
        }
        else
        {
          if ( eq_text.find( '=', eq_pos + 1 ) != std::string::npos )
            throw parse_error( "more than one '=' in equation" );
          lhs = parse_bool_expr( std::string_view( eq_text ).substr( 0, eq_pos ) );
          rhs = parse_bool_expr( std::string_view( eq_text ).substr( eq_pos + 1 ) );
        }

        std::vector<std::string> used;
        collect_vars( *lhs, used );
        collect_vars( *rhs, used );
        bool drop = false;
        for ( auto const& name : used )
        {
          if ( !declared.count( name ) )
            throw parse_error( "undeclared identifier '" + name + "'" );
          if ( other_outputs.count( name ) )
            drop = true; /* belongs to a different output's run */
        }
        if ( drop )
          continue;

        auto poly = bool_to_poly( *lhs, vars ) + bool_to_poly( *rhs, vars );
        if ( !poly.is_zero() )
          row.equations.push_back( std::move( poly ) );
      }
      catch ( parse_error const& e )
      {
        throw parse_error( std::string( e.what() ) + " (row starting at line " + std::to_string( rr.line ) + ")",
                           rr.line );
      }
    }
    rows.push_back( std::move( row ) );
  }
  return truth_table( std::move( vars ), std::move( rows ) );
}

std::string to_text( truth_table const& table, monomial_order const& ord )
{
  auto const& vars = table.vars();
  std::ostringstream out;
  out << "[inputs]";
  for ( std::size_t j = 0; j < vars.num_inputs(); ++j )
    out << ' ' << vars.name( vars.input_index( j ) );
  out << "\n[output] " << vars.output_name() << '\n';
  if ( vars.num_intermediates() > 0 )
  {
    out << "[intermediates]";
    for ( std::size_t i = 0; i < vars.num_intermediates(); ++i )
      out << ' ' << vars.name( i );
    out << '\n';
  }
  for ( auto const& row : table.rows() )
  {
    out << "[row]\n";
    for ( auto const& eq : row.equations )
      out << to_string( eq, vars, ord ) << " = 0\n";
  }
  return out.str();
}

} // namespace gbsynth
