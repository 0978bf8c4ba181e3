#include "gbsynth/monomial_order.hpp"

#include <stdexcept>

namespace gbsynth
{

namespace
{

std::strong_ordering lex_range( monomial const& a, monomial const& b, std::size_t begin, std::size_t end )
{
  for ( std::size_t i = begin; i < end; ++i )
  {
    if ( auto c = a.exponent( i ) <=> b.exponent( i ); c != 0 )
      return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grlex_range( monomial const& a, monomial const& b, std::size_t begin, std::size_t end )
{
  unsigned da = 0, db = 0;
  for ( std::size_t i = begin; i < end; ++i )
  {
    da += a.exponent( i );
    db += b.exponent( i );
  }
  if ( auto c = da <=> db; c != 0 )
    return c;
  return lex_range( a, b, begin, end );
}

} // namespace

std::strong_ordering monomial_order::compare( monomial const& a, monomial const& b ) const
{
  if ( a.num_vars() != b.num_vars() )
    throw std::invalid_argument( "monomial dimension mismatch" );
  std::size_t const n = a.num_vars();
  switch ( kind_ )
  {
  case kind_t::lex:
    return lex_range( a, b, 0, n );
  case kind_t::grlex:
    return grlex_range( a, b, 0, n );
  case kind_t::block:
  {
    std::size_t const s = split_ < n ? split_ : n;
    if ( auto c = lex_range( a, b, 0, s ); c != 0 )
      return c;
    return grlex_range( a, b, s, n );
  }
  }
  throw std::logic_error( "unreachable" );
}

std::string monomial_order::to_string() const
{
  switch ( kind_ )
  {
  case kind_t::lex:
    return "lex";
  case kind_t::grlex:
    return "grlex";
  case kind_t::block:
    return "block(" + std::to_string( split_ ) + ")";
  }
  return "?";
}

std::strong_ordering compare( monomial const& a, monomial const& b, monomial_order const& ord )
{
  return ord.compare( a, b );
}

} // namespace gbsynth
