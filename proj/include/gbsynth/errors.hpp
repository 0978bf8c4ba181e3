/*! \file errors.hpp
  \brief Error types shared across the library
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbsynth
{

/* Malformed input text (table files, polynomial strings). */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& msg, std::size_t line = 0, std::size_t column = 0 )
      : std::runtime_error( locate( msg, line, column ) ), line_( line ), column_( column )
  {
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string locate( std::string const& msg, std::size_t line, std::size_t column )
  {
    if ( line == 0 )
      return msg;
    std::string s = "line " + std::to_string( line );
    if ( column > 0 )
      s += ", column " + std::to_string( column );
    return s + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

/* Two rows of a truth table cannot be combined: their ideals are not coprime,
   or they overlap on inputs with conflicting outputs.  Row indices are 1-based. */
class coprimality_violation : public std::runtime_error
{
public:
  coprimality_violation( std::string const& msg, std::size_t row_a, std::size_t row_b )
      : std::runtime_error( msg ), row_a_( row_a ), row_b_( row_b )
  {
  }

  std::size_t row_a() const { return row_a_; }
  std::size_t row_b() const { return row_b_; }

private:
  std::size_t row_a_;
  std::size_t row_b_;
};

/* The eliminated basis holds no element whose leading term is the output
   variable: the table does not determine the output. */
class no_form_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/* A configured basis-size or term-count cap was hit. */
class resource_limit_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/* An exhaustive-enumeration cap was hit (too many inputs or don't cares). */
class cap_exceeded_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace gbsynth
