#include "gbsynth/groebner.hpp"

#include "gbsynth/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace gbsynth
{

ideal::ideal( std::size_t num_vars, std::vector<polynomial> generators ) : n_( num_vars )
{
  for ( auto const& g : generators )
  {
    if ( g.num_vars() != num_vars )
      throw std::invalid_argument( "generator dimension mismatch" );
    if ( !g.is_zero() )
      gens_.push_back( g );
  }
  std::sort( gens_.begin(), gens_.end() );
  gens_.erase( std::unique( gens_.begin(), gens_.end() ), gens_.end() );
  if ( gens_.empty() )
    throw std::invalid_argument( "ideal needs at least one nonzero generator" );
}

polynomial s_polynomial( polynomial const& f, polynomial const& g, monomial_order const& ord )
{
  if ( f.is_zero() || g.is_zero() )
    throw std::invalid_argument( "s-polynomial of the zero polynomial" );
  auto const& ltf = f.leading_term( ord );
  auto const& ltg = g.leading_term( ord );
  auto const l = monomial::lcm( ltf, ltg );
  auto const uf = polynomial::from_monomial( l.divided_by( ltf ) );
  auto const ug = polynomial::from_monomial( l.divided_by( ltg ) );
  return uf * f + ug * g;
}

namespace
{

using term_list = std::vector<monomial>; /* descending under the engine's order */

/* XOR-merge of two strictly descending term lists */
term_list merge_xor( std::span<monomial const> a, std::span<monomial const> b, monomial_order const& ord )
{
  term_list out;
  out.reserve( a.size() + b.size() );
  std::size_t i = 0, j = 0;
  while ( i < a.size() && j < b.size() )
  {
    if ( a[i] == b[j] )
    {
      ++i;
      ++j;
    }
    else if ( ord.greater( a[i], b[j] ) )
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

struct gb_engine
{
  std::size_t n;
  monomial_order ord;
  buchberger_stats stats{};
  std::vector<term_list> basis;

  gb_engine( std::size_t num_vars, monomial_order const& o ) : n( num_vars ), ord( o ) {}

  term_list to_ord_terms( polynomial const& p ) const
  {
    auto terms = p.terms();
    if ( ord.kind() != monomial_order::kind_t::lex )
      std::sort( terms.begin(), terms.end(), [&]( auto const& a, auto const& b ) { return ord.greater( a, b ); } );
    return terms;
  }

  polynomial to_polynomial( term_list terms ) const
  {
    return polynomial::from_terms( n, std::move( terms ) );
  }

  /* full normal form of `work` against the basis, skipping index `skip` */
  term_list reduce( term_list work, std::size_t skip = SIZE_MAX )
  {
    term_list remainder;
    std::size_t head = 0;
    while ( head < work.size() )
    {
      monomial const& t = work[head];
      std::size_t pick = basis.size();
      for ( std::size_t i = 0; i < basis.size(); ++i )
      {
        if ( i != skip && !basis[i].empty() && basis[i].front().divides( t ) )
        {
          pick = i;
          break;
        }
      }
      if ( pick == basis.size() )
      {
        remainder.push_back( t );
        ++head;
        continue;
      }
      monomial const q = t.divided_by( basis[pick].front() );
      term_list scaled;
      scaled.reserve( basis[pick].size() - 1 );
      for ( std::size_t i = 1; i < basis[pick].size(); ++i )
        scaled.push_back( basis[pick][i].times( q ) );
      work = merge_xor( std::span( work ).subspan( head + 1 ), scaled, ord );
      head = 0;
      ++stats.reduction_steps;
    }
    return remainder;
  }

  term_list spoly( std::size_t i, std::size_t j ) const
  {
    auto const& f = basis[i];
    auto const& g = basis[j];
    auto const l = monomial::lcm( f.front(), g.front() );
    auto const qf = l.divided_by( f.front() );
    auto const qg = l.divided_by( g.front() );
    term_list a, b;
    a.reserve( f.size() - 1 );
    b.reserve( g.size() - 1 );
    for ( std::size_t p = 1; p < f.size(); ++p )
      a.push_back( f[p].times( qf ) );
    for ( std::size_t p = 1; p < g.size(); ++p )
      b.push_back( g[p].times( qg ) );
    return merge_xor( a, b, ord ); /* both heads equal the lcm and cancel */
  }

  void sort_canonical()
  {
    std::sort( basis.begin(), basis.end(), [&]( term_list const& a, term_list const& b ) {
      if ( auto c = ord.compare( a.front(), b.front() ); c != 0 )
        return c < 0;
      return a < b;
    } );
  }

  /* interreduce to a fixpoint; drops elements that reduce to zero */
  void interreduce()
  {
    bool changed = true;
    while ( changed )
    {
      changed = false;
      sort_canonical();
      for ( std::size_t i = 0; i < basis.size(); ++i )
      {
        auto r = reduce( basis[i], i );
        if ( r == basis[i] )
          continue;
        changed = true;
        if ( r.empty() )
        {
          basis.erase( basis.begin() + static_cast<std::ptrdiff_t>( i ) );
          --i;
        }
        else
        {
          basis[i] = std::move( r );
        }
      }
    }
  }

  bool has_unit() const
  {
    for ( auto const& e : basis )
    {
      if ( e.size() == 1 && e.front().is_one() )
        return true;
    }
    return false;
  }
};

struct spair
{
  std::size_t i, j; /* i < j */
  monomial lcm;
  std::size_t seq;
  bool alive = true;
};

std::uint64_t pair_key( std::size_t i, std::size_t j )
{
  return ( static_cast<std::uint64_t>( i ) << 32 ) | static_cast<std::uint64_t>( j );
}

groebner_basis unit_basis( std::size_t n, monomial_order const& ord )
{
  return groebner_basis{ { polynomial::one( n ) }, ord, false };
}

} // namespace

groebner_basis buchberger( ideal const& idl, monomial_order const& ord, buchberger_options const& opts,
                           buchberger_stats* stats )
{
  gb_engine e( idl.num_vars(), ord );
  for ( auto const& g : idl.generators() )
    e.basis.push_back( e.to_ord_terms( g ) );
  std::sort( e.basis.begin(), e.basis.end() );
  e.basis.erase( std::unique( e.basis.begin(), e.basis.end() ), e.basis.end() );

  if ( opts.interreduce_input )
    e.interreduce();
  if ( e.has_unit() )
  {
    if ( stats )
      stats->accumulate( e.stats );
    return unit_basis( idl.num_vars(), ord );
  }
  if ( e.basis.size() > opts.max_basis_size )
    throw resource_limit_error( "basis size exceeds cap (" + std::to_string( opts.max_basis_size ) + ")" );
  for ( auto const& terms : e.basis )
  {
    if ( terms.size() > opts.max_term_count )
      throw resource_limit_error( "polynomial term count exceeds cap (" + std::to_string( opts.max_term_count ) +
                                  ")" );
  }

  std::vector<spair> pairs;
  std::unordered_map<std::uint64_t, std::size_t> pair_index;
  std::size_t alive = 0;
  auto const add_pair = [&]( std::size_t i, std::size_t j ) {
    spair p{ i, j, monomial::lcm( e.basis[i].front(), e.basis[j].front() ), pairs.size(), true };
    pair_index.emplace( pair_key( i, j ), pairs.size() );
    pairs.push_back( std::move( p ) );
    ++alive;
    ++e.stats.pairs_formed;
  };
  auto const pair_pending = [&]( std::size_t i, std::size_t j ) {
    auto const it = pair_index.find( pair_key( std::min( i, j ), std::max( i, j ) ) );
    return it != pair_index.end() && pairs[it->second].alive;
  };

  for ( std::size_t j = 1; j < e.basis.size(); ++j )
  {
    for ( std::size_t i = 0; i < j; ++i )
      add_pair( i, j );
  }

  while ( alive > 0 )
  {
    /* select the next pair */
    std::size_t best = SIZE_MAX;
    for ( std::size_t p = 0; p < pairs.size(); ++p )
    {
      if ( !pairs[p].alive )
        continue;
      if ( best == SIZE_MAX )
      {
        best = p;
        continue;
      }
      if ( opts.strategy == pair_strategy::first_in_first_out )
      {
        if ( pairs[p].seq < pairs[best].seq )
          best = p;
      }
      else
      {
        auto const c = ord.compare( pairs[p].lcm, pairs[best].lcm );
        if ( c < 0 || ( c == 0 && pairs[p].seq < pairs[best].seq ) )
          best = p;
      }
    }
    spair& pr = pairs[best];
    pr.alive = false;
    --alive;

    if ( opts.product_criterion && e.basis[pr.i].front().disjoint_from( e.basis[pr.j].front() ) )
    {
      ++e.stats.pairs_skipped;
      continue;
    }
    if ( opts.chain_criterion )
    {
      bool skip = false;
      for ( std::size_t k = 0; k < e.basis.size() && !skip; ++k )
      {
        if ( k == pr.i || k == pr.j )
          continue;
        if ( e.basis[k].front().divides( pr.lcm ) && !pair_pending( pr.i, k ) && !pair_pending( pr.j, k ) )
          skip = true;
      }
      if ( skip )
      {
        ++e.stats.pairs_skipped;
        continue;
      }
    }

    auto h = e.reduce( e.spoly( pr.i, pr.j ) );
    ++e.stats.pairs_reduced;
    if ( h.empty() )
    {
      ++e.stats.zero_reductions;
      continue;
    }
    if ( h.size() == 1 && h.front().is_one() )
    {
      if ( stats )
        stats->accumulate( e.stats );
      return unit_basis( idl.num_vars(), ord );
    }
    if ( h.size() > opts.max_term_count )
      throw resource_limit_error( "polynomial term count exceeds cap (" + std::to_string( opts.max_term_count ) + ")" );
    if ( e.basis.size() + 1 > opts.max_basis_size )
      throw resource_limit_error( "basis size exceeds cap (" + std::to_string( opts.max_basis_size ) + ")" );

    std::size_t const t = e.basis.size();
    e.basis.push_back( std::move( h ) );
    for ( std::size_t i = 0; i < t; ++i )
      add_pair( i, t );
  }

  groebner_basis out{ {}, ord, false };
  out.elements.reserve( e.basis.size() );
  for ( auto& terms : e.basis )
    out.elements.push_back( e.to_polynomial( std::move( terms ) ) );
  if ( stats )
    stats->accumulate( e.stats );
  return out;
}

groebner_basis reduce_basis( groebner_basis g, buchberger_stats* stats )
{
  if ( g.elements.empty() )
  {
    g.reduced = true;
    return g;
  }
  std::size_t const n = g.elements.front().num_vars();
  gb_engine e( n, g.ord );
  for ( auto const& p : g.elements )
  {
    if ( p.is_zero() )
      throw std::invalid_argument( "zero element in basis" );
    e.basis.push_back( e.to_ord_terms( p ) );
  }
  std::sort( e.basis.begin(), e.basis.end() );
  e.basis.erase( std::unique( e.basis.begin(), e.basis.end() ), e.basis.end() );
  e.interreduce();

  /* canonical output order: leading terms descending */
  std::sort( e.basis.begin(), e.basis.end(), [&]( term_list const& a, term_list const& b ) {
    if ( auto c = g.ord.compare( a.front(), b.front() ); c != 0 )
      return c > 0;
    return a > b;
  } );

  groebner_basis out{ {}, g.ord, true };
  out.elements.reserve( e.basis.size() );
  for ( auto& terms : e.basis )
    out.elements.push_back( e.to_polynomial( std::move( terms ) ) );
  if ( stats )
    stats->accumulate( e.stats );
  return out;
}

groebner_basis reduced_groebner_basis( ideal const& i, monomial_order const& ord, buchberger_options const& opts,
                                       buchberger_stats* stats )
{
  return reduce_basis( buchberger( i, ord, opts, stats ), stats );
}

ideal ideal_product( ideal const& a, ideal const& b )
{
  if ( a.num_vars() != b.num_vars() )
    throw std::invalid_argument( "ideal dimension mismatch" );
  std::vector<polynomial> gens;
  gens.reserve( a.generators().size() * b.generators().size() );
  for ( auto const& f : a.generators() )
  {
    for ( auto const& g : b.generators() )
      gens.push_back( f * g );
  }
  return ideal( a.num_vars(), std::move( gens ) );
}

ideal ideal_sum( ideal const& a, ideal const& b )
{
  if ( a.num_vars() != b.num_vars() )
    throw std::invalid_argument( "ideal dimension mismatch" );
  std::vector<polynomial> gens = a.generators();
  gens.insert( gens.end(), b.generators().begin(), b.generators().end() );
  return ideal( a.num_vars(), std::move( gens ) );
}

bool is_coprime( ideal const& a, ideal const& b, monomial_order const& ord, buchberger_options const& opts )
{
  auto const gb = reduced_groebner_basis( ideal_sum( a, b ), ord, opts );
  return gb.elements.size() == 1 && gb.elements.front().is_one();
}

bool contains( groebner_basis const& g, polynomial const& f )
{
  if ( f.is_zero() )
    return true;
  return normal_form( f, g.elements, g.ord ).is_zero();
}

} // namespace gbsynth
