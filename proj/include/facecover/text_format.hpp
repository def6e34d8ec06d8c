/* facecover: DNF minimization and lower-bound auditing for few-zero Boolean functions
 * Copyright (C) 2026  the facecover authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file text_format.hpp
  \brief Reading and writing the zero-matrix text format

  One row per line made of the characters '0' and '1'.  Blank lines are
  skipped and everything after a '#' is a comment.
*/

#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "zero_matrix.hpp"

namespace facecover
{

inline few_zero_function parse_matrix( std::istream& in, matrix_limits limits = {} )
{
  std::vector<bit_vector> rows;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( auto hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    auto const b = line.find_first_not_of( " \t\r" );
    if ( b == std::string::npos )
    {
      continue;
    }
    auto const e = line.find_last_not_of( " \t\r" );
    auto const text = line.substr( b, e - b + 1u );
    if ( text.find_first_not_of( "01" ) != std::string::npos )
    {
      throw error( error_kind::malformed_row, "line " + std::to_string( line_no ) + ": characters other than 0/1 in '" + text + "'" );
    }
    if ( width == 0u )
    {
      width = text.size();
    }
    else if ( text.size() != width )
    {
      throw error( error_kind::malformed_row, "line " + std::to_string( line_no ) + ": row has " + std::to_string( text.size() ) + " columns, expected " + std::to_string( width ) );
    }
    if ( auto [it, inserted] = first_line.emplace( text, line_no ); !inserted )
    {
      throw error( error_kind::duplicate_row, "lines " + std::to_string( it->second ) + " and " + std::to_string( line_no ) + " both contain " + text );
    }
    rows.push_back( bit_vector::from_string( text ) );
  }
  if ( rows.empty() )
  {
    throw error( error_kind::malformed_row, "no rows in input" );
  }
  return few_zero_function( zero_matrix( std::move( rows ), limits ) );
}

inline few_zero_function parse_matrix_text( std::string const& text, matrix_limits limits = {} )
{
  std::istringstream in( text );
  return parse_matrix( in, limits );
}

inline few_zero_function parse_matrix_file( std::string const& path, matrix_limits limits = {} )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw error( error_kind::io_error, "cannot open " + path );
  }
  return parse_matrix( in, limits );
}

inline std::string format_matrix( few_zero_function const& f )
{
  return f.matrix().to_text();
}

} // namespace facecover
