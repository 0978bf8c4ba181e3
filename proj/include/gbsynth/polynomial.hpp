/*! \file polynomial.hpp
  \brief Polynomials over GF(2): duplicate-free term sets

  Coefficients are implicitly 1, so a polynomial is just its set of
  monomials and addition is symmetric difference.  Terms are kept sorted
  descending under plain lex, which doubles as the canonical form for
  equality and hashing-free deduplication; operations that depend on a
  monomial order take it explicitly.
*/

#pragma once

#include "monomial.hpp"
#include "monomial_order.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gbsynth
{

using gf2 = std::uint8_t; /* 0 or 1 */

class polynomial
{
public:
  static polynomial zero( std::size_t num_vars )
  {
    return polynomial( num_vars, {} );
  }

  static polynomial one( std::size_t num_vars )
  {
    return polynomial( num_vars, { monomial( num_vars ) } );
  }

  static polynomial variable( std::size_t num_vars, std::size_t index )
  {
    return polynomial( num_vars, { monomial::variable( num_vars, index ) } );
  }

  static polynomial from_monomial( monomial m )
  {
    auto const n = m.num_vars();
    return polynomial( n, { std::move( m ) } );
  }

  /* canonicalizes: sorts and cancels duplicate pairs (characteristic 2) */
  static polynomial from_terms( std::size_t num_vars, std::vector<monomial> terms );

  std::size_t num_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  std::size_t term_count() const { return terms_.size(); }
  std::vector<monomial> const& terms() const { return terms_; }

  bool is_multilinear() const;
  bool mentions( std::size_t var_index ) const;

  /* maximal term under ord; throws std::domain_error on the zero polynomial */
  monomial const& leading_term( monomial_order const& ord ) const;

  /* point assigns a GF(2) value to every variable, indexed by roster position */
  gf2 evaluate( std::span<gf2 const> point ) const;

  polynomial& operator+=( polynomial const& other );
  polynomial& operator*=( polynomial const& other );

  friend polynomial operator+( polynomial const& a, polynomial const& b )
  {
    polynomial r( a );
    r += b;
    return r;
  }

  friend polynomial operator*( polynomial const& a, polynomial const& b );

  bool operator==( polynomial const& other ) const = default;

  /* structural order, used for canonical generator lists */
  auto operator<=>( polynomial const& other ) const
  {
    return terms_ <=> other.terms_;
  }

private:
  polynomial( std::size_t num_vars, std::vector<monomial> sorted_terms )
      : n_( num_vars ), terms_( std::move( sorted_terms ) )
  {
  }

  std::size_t n_;
  std::vector<monomial> terms_; /* strictly descending under structural lex */
};

/*! \brief Remainder of multivariate division of f by a divisor list.
 *
 * Fully reduces: no term of the result is divisible by any divisor's
 * leading term.  Deterministic: each step cancels the current maximal term
 * against the first divisor in list order whose leading term divides it.
 */
polynomial normal_form( polynomial const& f, std::span<polynomial const> divisors, monomial_order const& ord );

} // namespace gbsynth
