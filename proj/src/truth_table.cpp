#include "gbsynth/truth_table.hpp"

#include <stdexcept>

namespace gbsynth
{

truth_table::truth_table( variable_table vars, std::vector<table_row> rows )
    : vars_( std::move( vars ) ), rows_( std::move( rows ) )
{
  if ( rows_.empty() )
    throw std::invalid_argument( "truth table needs at least one row" );
  for ( auto const& r : rows_ )
  {
    for ( auto const& eq : r.equations )
    {
      if ( eq.num_vars() != vars_.num_vars() )
        throw std::invalid_argument( "row equation dimension mismatch" );
    }
  }
}

bool truth_table::row_constrains_output( std::size_t row_index ) const
{
  auto const out = vars_.output_index();
  for ( auto const& eq : rows_.at( row_index ).equations )
  {
    if ( eq.mentions( out ) )
      return true;
  }
  return false;
}

std::vector<std::size_t> truth_table::constrained_rows() const
{
  std::vector<std::size_t> idx;
  for ( std::size_t i = 0; i < rows_.size(); ++i )
  {
    if ( row_constrains_output( i ) )
      idx.push_back( i );
  }
  return idx;
}

} // namespace gbsynth
