/*! \file monomial.hpp
  \brief Monomials as exponent vectors

  A monomial stores one small exponent per ring variable.  Exponents above 1
  are legal: the ring is the full polynomial ring, not the Boolean quotient;
  squarefreeness of results comes from the field polynomials x^2 + x, not
  from the representation.  Exponent arithmetic is overflow-checked.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gbsynth
{

class monomial
{
public:
  using exponent_type = std::uint8_t;

  /* the monomial 1 */
  explicit monomial( std::size_t num_vars ) : exps_( num_vars, 0 ) {}

  explicit monomial( std::vector<exponent_type> exponents ) : exps_( std::move( exponents ) ) {}

  static monomial variable( std::size_t num_vars, std::size_t index, exponent_type e = 1 )
  {
    monomial m( num_vars );
    m.exps_.at( index ) = e;
    return m;
  }

  std::size_t num_vars() const { return exps_.size(); }
  exponent_type exponent( std::size_t i ) const { return exps_[i]; }
  std::vector<exponent_type> const& exponents() const { return exps_; }

  unsigned degree() const
  {
    return std::accumulate( exps_.begin(), exps_.end(), 0u );
  }

  bool is_one() const
  {
    for ( auto e : exps_ )
    {
      if ( e != 0 )
        return false;
    }
    return true;
  }

  bool is_multilinear() const
  {
    for ( auto e : exps_ )
    {
      if ( e > 1 )
        return false;
    }
    return true;
  }

  monomial times( monomial const& other ) const
  {
    check_dims( other );
    monomial r( *this );
    for ( std::size_t i = 0; i < exps_.size(); ++i )
    {
      unsigned sum = unsigned( r.exps_[i] ) + unsigned( other.exps_[i] );
      if ( sum > 255u )
        throw std::overflow_error( "monomial exponent overflow" );
      r.exps_[i] = static_cast<exponent_type>( sum );
    }
    return r;
  }

  bool divides( monomial const& other ) const
  {
    check_dims( other );
    for ( std::size_t i = 0; i < exps_.size(); ++i )
    {
      if ( exps_[i] > other.exps_[i] )
        return false;
    }
    return true;
  }

  /* pre: divisor.divides( *this ) */
  monomial divided_by( monomial const& divisor ) const
  {
    check_dims( divisor );
    monomial r( *this );
    for ( std::size_t i = 0; i < exps_.size(); ++i )
    {
      if ( divisor.exps_[i] > r.exps_[i] )
        throw std::invalid_argument( "monomial division is not exact" );
      r.exps_[i] = static_cast<exponent_type>( r.exps_[i] - divisor.exps_[i] );
    }
    return r;
  }

  static monomial lcm( monomial const& a, monomial const& b )
  {
    a.check_dims( b );
    monomial r( a );
    for ( std::size_t i = 0; i < r.exps_.size(); ++i )
    {
      r.exps_[i] = std::max( r.exps_[i], b.exps_[i] );
    }
    return r;
  }

  /* no variable occurs in both monomials */
  bool disjoint_from( monomial const& other ) const
  {
    check_dims( other );
    for ( std::size_t i = 0; i < exps_.size(); ++i )
    {
      if ( exps_[i] != 0 && other.exps_[i] != 0 )
        return false;
    }
    return true;
  }

  /* structural comparison: plain lexicographic over exponent vectors */
  auto operator<=>( monomial const& other ) const = default;

private:
  void check_dims( monomial const& other ) const
  {
    if ( exps_.size() != other.exps_.size() )
      throw std::invalid_argument( "monomial dimension mismatch" );
  }

  std::vector<exponent_type> exps_;
};

} // namespace gbsynth
