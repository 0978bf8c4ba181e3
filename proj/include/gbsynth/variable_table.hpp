/*! \file variable_table.hpp
  \brief Ordered roster of the ring variables and their roles

  The variable ordering is fixed as: all intermediate variables first, then
  the single output variable, then the input variables.  Position in this
  roster is the index used by monomials and polynomials throughout.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbsynth
{

enum class var_role
{
  intermediate,
  output,
  input
};

bool is_identifier( std::string_view s );

class variable_table
{
public:
  variable_table( std::vector<std::string> intermediates, std::string output, std::vector<std::string> inputs );

  std::size_t num_vars() const { return names_.size(); }          /* n */
  std::size_t num_intermediates() const { return k_; }            /* k */
  std::size_t num_inputs() const { return l_; }                   /* l */
  std::size_t output_index() const { return k_; }
  std::size_t input_index( std::size_t j ) const { return k_ + 1 + j; } /* j-th input, declaration order */

  var_role role( std::size_t index ) const;
  std::string const& name( std::size_t index ) const { return names_.at( index ); }
  std::string const& output_name() const { return names_[k_]; }
  std::optional<std::size_t> index_of( std::string_view name ) const;

  bool operator==( variable_table const& other ) const = default;

private:
  std::vector<std::string> names_;
  std::size_t k_;
  std::size_t l_;
};

} // namespace gbsynth
