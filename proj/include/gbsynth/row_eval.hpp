/*! \file row_eval.hpp
  \brief Mask-based evaluation of polynomials and rows over the Boolean cube

  A point of the cube is a bit mask: bit i is the value of the variable at
  roster position i.  A monomial evaluates to 1 exactly when every variable
  it mentions is set, so a GF(2) polynomial is the parity of its satisfied
  term masks.  This is what all the exhaustive sweeps run on.
*/

#pragma once

#include "errors.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <vector>

namespace gbsynth
{

using cube_point = std::uint32_t;

/* term masks of one polynomial; evaluation is a parity count */
struct mask_polynomial
{
  std::vector<cube_point> term_masks;

  static mask_polynomial from( polynomial const& p )
  {
    if ( p.num_vars() > 32 )
      throw cap_exceeded_error( "cube evaluation supports at most 32 variables" );
    mask_polynomial mp;
    mp.term_masks.reserve( p.term_count() );
    for ( auto const& t : p.terms() )
    {
      cube_point m = 0;
      for ( std::size_t i = 0; i < t.num_vars(); ++i )
      {
        if ( t.exponent( i ) != 0 )
          m |= cube_point( 1 ) << i;
      }
      mp.term_masks.push_back( m );
    }
    return mp;
  }

  bool evaluate( cube_point point ) const
  {
    unsigned acc = 0;
    for ( auto const m : term_masks )
      acc ^= ( ( point & m ) == m ) ? 1u : 0u;
    return acc != 0;
  }
};

class cube_evaluator
{
public:
  explicit cube_evaluator( truth_table const& table )
      : k_( table.vars().num_intermediates() ), l_( table.vars().num_inputs() )
  {
    if ( table.vars().num_vars() > 32 )
      throw cap_exceeded_error( "cube evaluation supports at most 32 variables" );
    rows_.reserve( table.num_rows() );
    for ( auto const& r : table.rows() )
    {
      std::vector<mask_polynomial> eqs;
      eqs.reserve( r.equations.size() );
      for ( auto const& eq : r.equations )
        eqs.push_back( mask_polynomial::from( eq ) );
      rows_.push_back( std::move( eqs ) );
    }
  }

  std::size_t num_inputs() const { return l_; }
  std::size_t num_rows() const { return rows_.size(); }

  /* input mask: bit j = value of the j-th input in declaration order */
  cube_point point_from( cube_point input_mask, cube_point extension_mask ) const
  {
    return ( input_mask << ( k_ + 1 ) ) | extension_mask;
  }

  bool row_satisfied_at_point( std::size_t row, cube_point point ) const
  {
    for ( auto const& eq : rows_[row] )
    {
      if ( eq.evaluate( point ) )
        return false;
    }
    return true;
  }

  /* bit 0: some satisfying extension has output 0; bit 1: output 1 */
  unsigned admitted_outputs( std::size_t row, cube_point input_mask ) const
  {
    unsigned admitted = 0;
    cube_point const ext_count = cube_point( 1 ) << ( k_ + 1 );
    for ( cube_point ext = 0; ext < ext_count; ++ext )
    {
      if ( row_satisfied_at_point( row, point_from( input_mask, ext ) ) )
        admitted |= ( ext >> k_ ) & 1u ? 2u : 1u;
      if ( admitted == 3u )
        break;
    }
    return admitted;
  }

  bool row_satisfiable( std::size_t row, cube_point input_mask ) const
  {
    return admitted_outputs( row, input_mask ) != 0;
  }

private:
  std::size_t k_;
  std::size_t l_;
  std::vector<std::vector<mask_polynomial>> rows_;
};

/* unpack an input mask into per-input values, declaration order */
inline std::vector<gf2> unpack_inputs( cube_point input_mask, std::size_t num_inputs )
{
  std::vector<gf2> v( num_inputs );
  for ( std::size_t j = 0; j < num_inputs; ++j )
    v[j] = ( input_mask >> j ) & 1u;
  return v;
}

/* lexicographic order on the unpacked input vectors */
inline bool input_lex_less( cube_point a, cube_point b, std::size_t num_inputs )
{
  for ( std::size_t j = 0; j < num_inputs; ++j )
  {
    auto const va = ( a >> j ) & 1u;
    auto const vb = ( b >> j ) & 1u;
    if ( va != vb )
      return va < vb;
  }
  return false;
}

} // namespace gbsynth
