/*! \file groebner.hpp
  \brief S-polynomials, the Buchberger algorithm, reduced bases, ideal algebra

  The pair queue supports two selection strategies: the normal strategy
  (smallest lcm under the active order) and first-in-first-out.  Both yield
  the same reduced basis; the second exists so tests can cross-check that
  uniqueness.  Pairs with disjoint leading monomials are skipped, and the
  chain criterion drops a pair when a third element divides its lcm and both
  associated pairs have already been handled.
*/

#pragma once

#include "polynomial.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gbsynth
{

class ideal
{
public:
  /* drops zero generators and duplicates; throws if nothing is left */
  ideal( std::size_t num_vars, std::vector<polynomial> generators );

  std::size_t num_vars() const { return n_; }
  std::vector<polynomial> const& generators() const { return gens_; }

private:
  std::size_t n_;
  std::vector<polynomial> gens_; /* canonically sorted, duplicate-free, nonzero */
};

struct groebner_basis
{
  std::vector<polynomial> elements;
  monomial_order ord;
  bool reduced = false;
};

enum class pair_strategy
{
  normal,
  first_in_first_out
};

struct buchberger_options
{
  pair_strategy strategy = pair_strategy::normal;
  bool product_criterion = true;
  bool chain_criterion = true;
  bool interreduce_input = true;
  std::size_t max_basis_size = 10000;
  std::size_t max_term_count = 1000000;
};

struct buchberger_stats
{
  std::size_t pairs_formed = 0;
  std::size_t pairs_reduced = 0;   /* S-polynomials actually divided */
  std::size_t pairs_skipped = 0;   /* pruned by a criterion */
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0; /* single division steps */

  void accumulate( buchberger_stats const& other )
  {
    pairs_formed += other.pairs_formed;
    pairs_reduced += other.pairs_reduced;
    pairs_skipped += other.pairs_skipped;
    zero_reductions += other.zero_reductions;
    reduction_steps += other.reduction_steps;
  }
};

polynomial s_polynomial( polynomial const& f, polynomial const& g, monomial_order const& ord );

/* basis generating the same ideal and satisfying the Buchberger criterion */
groebner_basis buchberger( ideal const& i, monomial_order const& ord, buchberger_options const& opts = {},
                           buchberger_stats* stats = nullptr );

/* interreduction to a fixpoint; on a Buchberger-criterion basis this yields
   the unique reduced basis of the ideal */
groebner_basis reduce_basis( groebner_basis g, buchberger_stats* stats = nullptr );

groebner_basis reduced_groebner_basis( ideal const& i, monomial_order const& ord, buchberger_options const& opts = {},
                                       buchberger_stats* stats = nullptr );

ideal ideal_product( ideal const& a, ideal const& b );
ideal ideal_sum( ideal const& a, ideal const& b );

bool is_coprime( ideal const& a, ideal const& b, monomial_order const& ord, buchberger_options const& opts = {} );

/* ideal membership: normal form of f modulo the basis is zero */
bool contains( groebner_basis const& g, polynomial const& f );

} // namespace gbsynth
