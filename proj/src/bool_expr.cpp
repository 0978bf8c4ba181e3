#include "gbsynth/bool_expr.hpp"

#include "gbsynth/errors.hpp"

#include <cctype>

namespace gbsynth
{

bool_expr_ptr bool_expr::constant( bool v )
{
  auto e = std::make_shared<bool_expr>();
  e->op = op_t::constant;
  e->value = v;
  return e;
}

bool_expr_ptr bool_expr::variable( std::string name )
{
  auto e = std::make_shared<bool_expr>();
  e->op = op_t::variable;
  e->var = std::move( name );
  return e;
}

namespace
{

bool_expr_ptr binary( bool_expr::op_t op, bool_expr_ptr a, bool_expr_ptr b )
{
  auto e = std::make_shared<bool_expr>();
  e->op = op;
  e->lhs = std::move( a );
  e->rhs = std::move( b );
  return e;
}

} // namespace

bool_expr_ptr bool_expr::make_not( bool_expr_ptr e )
{
  auto r = std::make_shared<bool_expr>();
  r->op = op_t::op_not;
  r->lhs = std::move( e );
  return r;
}

bool_expr_ptr bool_expr::make_and( bool_expr_ptr a, bool_expr_ptr b )
{
  return binary( op_t::op_and, std::move( a ), std::move( b ) );
}

bool_expr_ptr bool_expr::make_or( bool_expr_ptr a, bool_expr_ptr b )
{
  return binary( op_t::op_or, std::move( a ), std::move( b ) );
}

bool_expr_ptr bool_expr::make_xor( bool_expr_ptr a, bool_expr_ptr b )
{
  return binary( op_t::op_xor, std::move( a ), std::move( b ) );
}

polynomial bool_to_poly( bool_expr const& e, variable_table const& vars )
{
  std::size_t const n = vars.num_vars();
  switch ( e.op )
  {
  case bool_expr::op_t::constant:
    return e.value ? polynomial::one( n ) : polynomial::zero( n );
  case bool_expr::op_t::variable:
  {
    auto const idx = vars.index_of( e.var );
    if ( !idx )
      throw parse_error( "undeclared identifier '" + e.var + "'" );
    return polynomial::variable( n, *idx );
  }
  case bool_expr::op_t::op_not:
    return bool_to_poly( *e.lhs, vars ) + polynomial::one( n );
  case bool_expr::op_t::op_and:
    return bool_to_poly( *e.lhs, vars ) * bool_to_poly( *e.rhs, vars );
  case bool_expr::op_t::op_or:
  {
    auto const a = bool_to_poly( *e.lhs, vars );
    auto const b = bool_to_poly( *e.rhs, vars );
    return a + b + a * b;
  }
  case bool_expr::op_t::op_xor:
    return bool_to_poly( *e.lhs, vars ) + bool_to_poly( *e.rhs, vars );
  }
  throw std::logic_error( "unreachable" );
}

namespace
{

struct expr_parser
{
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws()
  {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
      ++pos;
  }

  char peek()
  {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat( char c )
  {
    if ( peek() == c )
    {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail( std::string const& msg )
  {
    throw parse_error( msg + " at position " + std::to_string( pos + 1 ) + " in '" + std::string( text ) + "'" );
  }

  /* '^' binds as an exponent only when an integer literal follows */
  bool at_exponent()
  {
    skip_ws();
    if ( pos >= text.size() || text[pos] != '^' )
      return false;
    std::size_t look = pos + 1;
    while ( look < text.size() && std::isspace( static_cast<unsigned char>( text[look] ) ) )
      ++look;
    return look < text.size() && std::isdigit( static_cast<unsigned char>( text[look] ) );
  }

  unsigned parse_uint()
  {
    skip_ws();
    unsigned v = 0;
    if ( pos >= text.size() || !std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
      fail( "expected integer" );
    while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
    {
      v = v * 10 + unsigned( text[pos] - '0' );
      if ( v > 255 )
        fail( "exponent too large" );
      ++pos;
    }
    return v;
  }

  bool_expr_ptr parse_atom()
  {
    skip_ws();
    if ( pos >= text.size() )
      fail( "unexpected end of expression" );
    char const c = text[pos];
    if ( c == '(' )
    {
      ++pos;
      auto e = parse_or();
      if ( !eat( ')' ) )
        fail( "expected ')'" );
      return e;
    }
    if ( c == '0' || c == '1' )
    {
      ++pos;
      return bool_expr::constant( c == '1' );
    }
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      std::size_t const start = pos;
      while ( pos < text.size() && ( std::isalnum( static_cast<unsigned char>( text[pos] ) ) || text[pos] == '_' ) )
        ++pos;
      auto e = bool_expr::variable( std::string( text.substr( start, pos - start ) ) );
      if ( at_exponent() )
      {
        ++pos; /* '^' */
        unsigned const exp = parse_uint();
        if ( exp == 0 )
          return bool_expr::constant( true );
        auto powered = e;
        for ( unsigned i = 1; i < exp; ++i )
          powered = bool_expr::make_and( powered, e );
        return powered;
      }
      return e;
    }
    fail( "expected constant, identifier or '('" );
  }

  bool_expr_ptr parse_not()
  {
    if ( eat( '!' ) )
      return bool_expr::make_not( parse_not() );
    return parse_atom();
  }

  bool_expr_ptr parse_and()
  {
    auto e = parse_not();
    while ( true )
    {
      char const c = peek();
      if ( c == '&' || c == '*' )
      {
        ++pos;
        e = bool_expr::make_and( std::move( e ), parse_not() );
      }
      else
      {
        return e;
      }
    }
  }

  bool_expr_ptr parse_xor()
  {
    auto e = parse_and();
    while ( true )
    {
      char const c = peek();
      if ( c == '+' || ( c == '^' && !at_exponent() ) )
      {
        ++pos;
        e = bool_expr::make_xor( std::move( e ), parse_and() );
      }
      else
      {
        return e;
      }
    }
  }

  bool_expr_ptr parse_or()
  {
    auto e = parse_xor();
    while ( eat( '|' ) )
      e = bool_expr::make_or( std::move( e ), parse_xor() );
    return e;
  }
};

} // namespace

bool_expr_ptr parse_bool_expr( std::string_view text )
{
  expr_parser p{ text };
  auto e = p.parse_or();
  p.skip_ws();
  if ( p.pos != text.size() )
    p.fail( "unexpected trailing input" );
  return e;
}

} // namespace gbsynth
