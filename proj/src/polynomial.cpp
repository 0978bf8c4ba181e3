#include "gbsynth/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gbsynth
{

namespace
{

void check_dims( polynomial const& a, polynomial const& b )
{
  if ( a.num_vars() != b.num_vars() )
    throw std::invalid_argument( "polynomial dimension mismatch" );
}

/* XOR-merge of two strictly descending term lists under `less` */
template<typename Less>
std::vector<monomial> merge_xor( std::span<monomial const> a, std::span<monomial const> b, Less&& less )
{
  std::vector<monomial> out;
  out.reserve( a.size() + b.size() );
  std::size_t i = 0, j = 0;
  while ( i < a.size() && j < b.size() )
  {
    if ( a[i] == b[j] )
    {
      ++i;
      ++j; /* cancel */
    }
    else if ( less( b[j], a[i] ) )
    {
      out.push_back( a[i++] );
    }
    else
    {
      out.push_back( b[j++] );
    }
  }
  out.insert( out.end(), a.begin() + i, a.end() );
  out.insert( out.end(), b.begin() + j, b.end() );
  return out;
}

} // namespace

polynomial polynomial::from_terms( std::size_t num_vars, std::vector<monomial> terms )
{
  for ( auto const& t : terms )
  {
    if ( t.num_vars() != num_vars )
      throw std::invalid_argument( "monomial dimension mismatch" );
  }
  std::sort( terms.begin(), terms.end(), std::greater<>{} );

  /* keep monomials with odd multiplicity */
  std::vector<monomial> kept;
  kept.reserve( terms.size() );
  for ( std::size_t i = 0; i < terms.size(); )
  {
    std::size_t j = i;
    while ( j < terms.size() && terms[j] == terms[i] )
      ++j;
    if ( ( j - i ) & 1u )
      kept.push_back( terms[i] );
    i = j;
  }
  return polynomial( num_vars, std::move( kept ) );
}

bool polynomial::is_multilinear() const
{
  for ( auto const& t : terms_ )
  {
    if ( !t.is_multilinear() )
      return false;
  }
  return true;
}

bool polynomial::mentions( std::size_t var_index ) const
{
  for ( auto const& t : terms_ )
  {
    if ( t.exponent( var_index ) != 0 )
      return true;
  }
  return false;
}

monomial const& polynomial::leading_term( monomial_order const& ord ) const
{
  if ( terms_.empty() )
    throw std::domain_error( "leading term of the zero polynomial" );
  if ( ord.kind() == monomial_order::kind_t::lex )
    return terms_.front(); /* storage order is lex */
  auto best = terms_.begin();
  for ( auto it = std::next( terms_.begin() ); it != terms_.end(); ++it )
  {
    if ( ord.greater( *it, *best ) )
      best = it;
  }
  return *best;
}

gf2 polynomial::evaluate( std::span<gf2 const> point ) const
{
  if ( point.size() != n_ )
    throw std::invalid_argument( "evaluation point does not assign every variable" );
  gf2 acc = 0;
  for ( auto const& t : terms_ )
  {
    gf2 v = 1;
    for ( std::size_t i = 0; i < n_ && v; ++i )
    {
      if ( t.exponent( i ) != 0 && point[i] == 0 )
        v = 0;
    }
    acc ^= v;
  }
  return acc;
}

polynomial& polynomial::operator+=( polynomial const& other )
{
  check_dims( *this, other );
  terms_ = merge_xor( terms_, other.terms_, std::less<>{} );
  return *this;
}

polynomial operator*( polynomial const& a, polynomial const& b )
{
  check_dims( a, b );
  std::vector<monomial> products;
  products.reserve( a.terms_.size() * b.terms_.size() );
  for ( auto const& ta : a.terms_ )
  {
    for ( auto const& tb : b.terms_ )
    {
      products.push_back( ta.times( tb ) );
    }
  }
  return polynomial::from_terms( a.num_vars(), std::move( products ) );
}

polynomial& polynomial::operator*=( polynomial const& other )
{
  *this = *this * other;
  return *this;
}

polynomial normal_form( polynomial const& f, std::span<polynomial const> divisors, monomial_order const& ord )
{
  bool const lex = ord.kind() == monomial_order::kind_t::lex;
  auto const by_ord = [&]( monomial const& a, monomial const& b ) { return ord.less( a, b ); };

  /* divisor terms sorted descending under ord; leading term at the front */
  std::vector<std::vector<monomial>> divs;
  divs.reserve( divisors.size() );
  for ( auto const& d : divisors )
  {
    if ( d.is_zero() )
      throw std::invalid_argument( "zero divisor in division" );
    check_dims( f, d );
    auto terms = d.terms();
    if ( !lex )
      std::sort( terms.begin(), terms.end(), [&]( auto const& a, auto const& b ) { return by_ord( b, a ); } );
    divs.push_back( std::move( terms ) );
  }

  std::vector<monomial> work = f.terms();
  if ( !lex )
    std::sort( work.begin(), work.end(), [&]( auto const& a, auto const& b ) { return by_ord( b, a ); } );

  std::vector<monomial> remainder;
  std::size_t head = 0;
  while ( head < work.size() )
  {
    monomial const& t = work[head];
    std::size_t pick = divs.size();
    for ( std::size_t i = 0; i < divs.size(); ++i )
    {
      if ( divs[i].front().divides( t ) )
      {
        pick = i;
        break;
      }
    }
    if ( pick == divs.size() )
    {
      remainder.push_back( t );
      ++head;
      continue;
    }
    /* work += (t / LT(d)) * d; the heads cancel exactly */
    monomial const q = t.divided_by( divs[pick].front() );
    std::vector<monomial> scaled;
    scaled.reserve( divs[pick].size() - 1 );
    for ( std::size_t i = 1; i < divs[pick].size(); ++i )
      scaled.push_back( divs[pick][i].times( q ) );
    work = merge_xor( std::span( work ).subspan( head + 1 ), scaled, by_ord );
    head = 0;
  }
  return polynomial::from_terms( f.num_vars(), std::move( remainder ) );
}

} // namespace gbsynth
