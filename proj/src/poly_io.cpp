#include "gbsynth/poly_io.hpp"

#include "gbsynth/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gbsynth
{

std::string to_string( monomial const& m, variable_table const& vars )
{
  if ( m.is_one() )
    return "1";
  std::string s;
  for ( std::size_t i = 0; i < m.num_vars(); ++i )
  {
    auto const e = m.exponent( i );
    if ( e == 0 )
      continue;
    if ( !s.empty() )
      s += '*';
    s += vars.name( i );
    if ( e > 1 )
      s += '^' + std::to_string( unsigned( e ) );
  }
  return s;
}

std::string to_string( polynomial const& p, variable_table const& vars, monomial_order const& ord )
{
  if ( p.is_zero() )
    return "0";
  auto terms = p.terms();
  std::sort( terms.begin(), terms.end(), [&]( auto const& a, auto const& b ) { return ord.greater( a, b ); } );
  std::string s;
  for ( auto const& t : terms )
  {
    if ( !s.empty() )
      s += " + ";
    s += to_string( t, vars );
  }
  return s;
}

namespace
{

struct cursor
{
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws()
  {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
      ++pos;
  }

  bool eat( char c )
  {
    skip_ws();
    if ( pos < text.size() && text[pos] == c )
    {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail( std::string const& msg ) const
  {
    throw parse_error( msg + " at position " + std::to_string( pos + 1 ) + " in '" + std::string( text ) + "'" );
  }

  std::string_view ident()
  {
    skip_ws();
    std::size_t const start = pos;
    if ( pos < text.size() && ( std::isalpha( static_cast<unsigned char>( text[pos] ) ) || text[pos] == '_' ) )
    {
      ++pos;
      while ( pos < text.size() && ( std::isalnum( static_cast<unsigned char>( text[pos] ) ) || text[pos] == '_' ) )
        ++pos;
    }
    return text.substr( start, pos - start );
  }

  unsigned uint()
  {
    skip_ws();
    if ( pos >= text.size() || !std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
      fail( "expected integer" );
    unsigned v = 0;
    while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
    {
      v = v * 10 + unsigned( text[pos] - '0' );
      if ( v > 255 )
        fail( "exponent too large" );
      ++pos;
    }
    return v;
  }
};

monomial parse_term( cursor& c, variable_table const& vars )
{
  monomial m( vars.num_vars() );
  while ( true )
  {
    c.skip_ws();
    if ( c.pos < c.text.size() && c.text[c.pos] == '1' )
    {
      ++c.pos;
    }
    else
    {
      auto const name = c.ident();
      if ( name.empty() )
        c.fail( "expected '1' or identifier" );
      auto const idx = vars.index_of( name );
      if ( !idx )
        throw parse_error( "undeclared identifier '" + std::string( name ) + "'" );
      unsigned e = 1;
      if ( c.eat( '^' ) )
        e = c.uint();
      m = m.times( monomial::variable( vars.num_vars(), *idx, static_cast<monomial::exponent_type>( e ) ) );
    }
    if ( !c.eat( '*' ) )
      return m;
  }
}

} // namespace

polynomial parse_polynomial( std::string_view text, variable_table const& vars )
{
  cursor c{ text };
  c.skip_ws();
  if ( c.pos >= text.size() )
    throw parse_error( "empty polynomial" );

  /* the zero polynomial is written '0' and only '0' */
  if ( text[c.pos] == '0' )
  {
    ++c.pos;
    c.skip_ws();
    if ( c.pos != text.size() )
      c.fail( "unexpected input after '0'" );
    return polynomial::zero( vars.num_vars() );
  }

  std::vector<monomial> terms;
  terms.push_back( parse_term( c, vars ) );
  while ( c.eat( '+' ) )
    terms.push_back( parse_term( c, vars ) );
  c.skip_ws();
  if ( c.pos != text.size() )
    c.fail( "unexpected trailing input" );
  return polynomial::from_terms( vars.num_vars(), std::move( terms ) );
}

} // namespace gbsynth
