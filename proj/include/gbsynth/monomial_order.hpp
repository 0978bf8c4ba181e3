/*! \file monomial_order.hpp
  \brief Monomial orderings: lex, graded lex, and a lex/grlex block order

  `lex` is an elimination order for every prefix length.  `block( split )`
  compares positions [0, split) lexicographically first and positions
  [split, n) by graded lex, so it is an elimination order for prefix lengths
  up to `split`; with split = k + 1 it eliminates the intermediates and the
  output, which is what form extraction needs.
*/

#pragma once

#include "monomial.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace gbsynth
{

class monomial_order
{
public:
  enum class kind_t
  {
    lex,
    grlex,
    block
  };

  static monomial_order lex() { return monomial_order( kind_t::lex, 0 ); }
  static monomial_order grlex() { return monomial_order( kind_t::grlex, 0 ); }
  static monomial_order block( std::size_t split ) { return monomial_order( kind_t::block, split ); }

  kind_t kind() const { return kind_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare( monomial const& a, monomial const& b ) const;
  bool less( monomial const& a, monomial const& b ) const { return compare( a, b ) < 0; }
  bool greater( monomial const& a, monomial const& b ) const { return compare( a, b ) > 0; }

  std::string to_string() const;

  bool operator==( monomial_order const& other ) const = default;

private:
  monomial_order( kind_t kind, std::size_t split ) : kind_( kind ), split_( split ) {}

  kind_t kind_;
  std::size_t split_;
};

/* three-way comparison of monomials under an order */
std::strong_ordering compare( monomial const& a, monomial const& b, monomial_order const& ord );

} // namespace gbsynth
