#include "gbsynth/variable_table.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace gbsynth
{

bool is_identifier( std::string_view s )
{
  if ( s.empty() )
    return false;
  if ( !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
    return false;
  for ( char c : s )
  {
    if ( !( std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' ) )
      return false;
  }
  return true;
}

variable_table::variable_table( std::vector<std::string> intermediates, std::string output, std::vector<std::string> inputs )
    : k_( intermediates.size() ), l_( inputs.size() )
{
  names_ = std::move( intermediates );
  names_.push_back( std::move( output ) );
  names_.insert( names_.end(), inputs.begin(), inputs.end() );

  std::unordered_set<std::string_view> seen;
  for ( auto const& name : names_ )
  {
    if ( !is_identifier( name ) )
      throw std::invalid_argument( "invalid variable name: '" + name + "'" );
    if ( !seen.insert( name ).second )
      throw std::invalid_argument( "duplicate variable name: '" + name + "'" );
  }
}

var_role variable_table::role( std::size_t index ) const
{
  if ( index >= names_.size() )
    throw std::out_of_range( "variable index out of range" );
  if ( index < k_ )
    return var_role::intermediate;
  if ( index == k_ )
    return var_role::output;
  return var_role::input;
}

std::optional<std::size_t> variable_table::index_of( std::string_view name ) const
{
  for ( std::size_t i = 0; i < names_.size(); ++i )
  {
    if ( names_[i] == name )
      return i;
  }
  return std::nullopt;
}

} // namespace gbsynth
