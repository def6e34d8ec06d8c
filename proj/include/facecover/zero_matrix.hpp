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
  \file zero_matrix.hpp
  \brief Zero matrices and the few-zero Boolean functions they define

  A function f of n variables with k zeros is stored by its zero matrix: a
  k x n 0/1 matrix whose rows are exactly the zeros of f.  Rows are kept
  in lexicographic order, so two functions are equal iff their matrices are.

  Columns are stored as machine words (bit i of a column word is row i),
  which bounds k by 63.  The number of variables n is bounded by
  `matrix_limits::max_n`; operations that treat points as machine words
  additionally need n <= 63.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "error.hpp"

namespace facecover
{

inline constexpr std::size_t max_rows = 63u;
inline constexpr std::size_t max_word_vars = 63u;

struct matrix_limits
{
  std::size_t max_n = 63u;
};

/*! \brief Lexicographic (textual) order on column words of the same height. */
inline bool column_word_less( uint64_t a, uint64_t b ) noexcept
{
  auto const diff = a ^ b;
  if ( diff == 0u )
  {
    return false;
  }
  auto const low = diff & ( ~diff + 1u );
  return ( a & low ) == 0u;
}

inline uint64_t low_mask( std::size_t bits ) noexcept
{
  return bits >= 64u ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << bits ) - 1u;
}

class zero_matrix
{
public:
  zero_matrix() = default;

  /*! \brief Builds a matrix from its rows.

    Rows must be nonempty, of equal length and pairwise distinct; the
    matrix must not contain every point of the cube.
  */
  explicit zero_matrix( std::vector<bit_vector> rows, matrix_limits limits = {} )
      : rows_( std::move( rows ) )
  {
    if ( rows_.empty() )
    {
      throw error( error_kind::invalid_argument, "zero matrix needs at least one row" );
    }
    if ( rows_.size() > max_rows )
    {
      throw error( error_kind::invalid_argument, "zero matrix supports at most " + std::to_string( max_rows ) + " rows" );
    }
    n_ = rows_.front().size();
    if ( n_ == 0u )
    {
      throw error( error_kind::invalid_argument, "zero matrix needs at least one column" );
    }
    if ( n_ > limits.max_n )
    {
      throw error( error_kind::invalid_argument, "number of columns " + std::to_string( n_ ) + " exceeds limit " + std::to_string( limits.max_n ) );
    }
    for ( auto const& r : rows_ )
    {
      if ( r.size() != n_ )
      {
        throw error( error_kind::length_mismatch, "rows of a zero matrix must have equal length" );
      }
    }
    std::sort( rows_.begin(), rows_.end() );
    if ( auto it = std::adjacent_find( rows_.begin(), rows_.end() ); it != rows_.end() )
    {
      throw error( error_kind::duplicate_row, "row " + it->to_string() + " occurs twice" );
    }
    rebuild_columns();
  }

  static zero_matrix from_strings( std::vector<std::string> const& rows, matrix_limits limits = {} )
  {
    std::vector<bit_vector> v;
    v.reserve( rows.size() );
    for ( auto const& r : rows )
    {
      v.push_back( bit_vector::from_string( r ) );
    }
    return zero_matrix( std::move( v ), limits );
  }

  /*! \brief Builds a matrix from column words of height `k`. */
  static zero_matrix from_columns( std::vector<uint64_t> const& columns, std::size_t k, matrix_limits limits = {} )
  {
    if ( k == 0u || k > max_rows )
    {
      throw error( error_kind::invalid_argument, "column height must be in [1, 63]" );
    }
    std::vector<bit_vector> rows( k, bit_vector( columns.size() ) );
    for ( std::size_t j = 0; j < columns.size(); ++j )
    {
      if ( columns[j] & ~low_mask( k ) )
      {
        throw error( error_kind::invalid_argument, "column word has bits above the column height" );
      }
      for ( auto c = columns[j]; c != 0u; c &= c - 1u )
      {
        rows[static_cast<std::size_t>( std::countr_zero( c ) )].set( j, true );
      }
    }
    return zero_matrix( std::move( rows ), limits );
  }

  std::size_t k() const noexcept { return rows_.size(); }
  std::size_t n() const noexcept { return n_; }

  std::vector<bit_vector> const& rows() const noexcept { return rows_; }
  bit_vector const& row( std::size_t i ) const
  {
    check_row( i );
    return rows_[i];
  }

  /*! \brief Row `i` as a point word (bit j is coordinate j); needs n <= 63. */
  uint64_t row_word( std::size_t i ) const
  {
    check_row( i );
    require_word_points();
    return rows_[i].to_word();
  }

  std::vector<uint64_t> const& column_words() const noexcept { return columns_; }

  uint64_t column_word( std::size_t t ) const
  {
    check_column( t );
    return columns_[t];
  }

  bit_vector column( std::size_t t ) const { return bit_vector::from_word( column_word( t ), k() ); }

  uint64_t all_rows_mask() const noexcept { return low_mask( k() ); }

  void require_word_points() const
  {
    if ( n_ > max_word_vars )
    {
      throw error( error_kind::invalid_argument, "operation needs n <= 63 (points as machine words), got n = " + std::to_string( n_ ) );
    }
  }

  /*! \brief Submatrix on the given rows (all columns kept). */
  zero_matrix submatrix( std::vector<std::size_t> const& row_indices ) const
  {
    std::vector<bit_vector> r;
    r.reserve( row_indices.size() );
    for ( auto i : row_indices )
    {
      r.push_back( row( i ) );
    }
    return zero_matrix( std::move( r ), matrix_limits{ std::max<std::size_t>( n_, 63u ) } );
  }

  std::string to_text() const
  {
    std::string s;
    for ( auto const& r : rows_ )
    {
      s += r.to_string();
      s += '\n';
    }
    return s;
  }

  friend bool operator==( zero_matrix const& a, zero_matrix const& b ) { return a.rows_ == b.rows_; }

private:
  void rebuild_columns()
  {
    columns_.assign( n_, 0u );
    for ( std::size_t i = 0; i < rows_.size(); ++i )
    {
      auto const& words = rows_[i].words();
      for ( std::size_t w = 0; w < words.size(); ++w )
      {
        for ( auto bits = words[w]; bits != 0u; bits &= bits - 1u )
        {
          columns_[w * 64u + static_cast<std::size_t>( std::countr_zero( bits ) )] |= uint64_t( 1 ) << i;
        }
      }
    }
  }

  void check_row( std::size_t i ) const
  {
    if ( i >= rows_.size() )
    {
      throw error( error_kind::index_out_of_range, "row index " + std::to_string( i ) );
    }
  }

  void check_column( std::size_t t ) const
  {
    if ( t >= n_ )
    {
      throw error( error_kind::index_out_of_range, "column index " + std::to_string( t ) );
    }
  }

  std::vector<bit_vector> rows_;
  std::size_t n_ = 0;
  std::vector<uint64_t> columns_;
};

/*! \brief Boolean function that is 0 exactly on the rows of its zero matrix. */
class few_zero_function
{
public:
  few_zero_function() = default;
  explicit few_zero_function( zero_matrix matrix ) : matrix_( std::move( matrix ) )
  {
    if ( matrix_.n() <= max_word_vars )
    {
      zero_words_.reserve( matrix_.k() );
      for ( auto const& r : matrix_.rows() )
      {
        zero_words_.push_back( r.to_word() );
      }
      std::sort( zero_words_.begin(), zero_words_.end() );
    }
  }

  static few_zero_function from_strings( std::vector<std::string> const& rows, matrix_limits limits = {} )
  {
    return few_zero_function( zero_matrix::from_strings( rows, limits ) );
  }

  zero_matrix const& matrix() const noexcept { return matrix_; }
  std::size_t k() const noexcept { return matrix_.k(); }
  std::size_t n() const noexcept { return matrix_.n(); }

  bool evaluate( bit_vector const& point ) const
  {
    if ( point.size() != n() )
    {
      throw error( error_kind::length_mismatch, "point of length " + std::to_string( point.size() ) + " for a function of " + std::to_string( n() ) + " variables" );
    }
    return !std::binary_search( matrix_.rows().begin(), matrix_.rows().end(), point );
  }

  /*! \brief Evaluates at a point word; needs n <= 63. */
  bool evaluate( uint64_t point ) const
  {
    matrix_.require_word_points();
    return !std::binary_search( zero_words_.begin(), zero_words_.end(), point );
  }

  /*! \brief Zeros as point words, sorted numerically; needs n <= 63. */
  std::vector<uint64_t> const& zero_words() const
  {
    matrix_.require_word_points();
    return zero_words_;
  }

  friend bool operator==( few_zero_function const& a, few_zero_function const& b ) { return a.matrix_ == b.matrix_; }

private:
  zero_matrix matrix_;
  std::vector<uint64_t> zero_words_;
};

struct column_partition
{
  std::vector<std::size_t> ones;  /* E(t) */
  std::vector<std::size_t> zeros; /* Z(t) */
};

/*! \brief Row sets E(t) and Z(t) of column `t` (0-based indices). */
inline column_partition column_sets( few_zero_function const& f, std::size_t t )
{
  auto const c = f.matrix().column_word( t );
  column_partition p;
  for ( std::size_t i = 0; i < f.k(); ++i )
  {
    ( ( c >> i ) & 1u ? p.ones : p.zeros ).push_back( i );
  }
  return p;
}

struct class_membership
{
  bool has_constant_column = false;
  bool rows_distinct = true;
  bool has_adjacent_zeros = false;
  bool is_proper = false;
  bool is_reduced = false;
  bool is_complete = false;
  std::size_t min_column_weight = 0;
  bool ones_le_zeros_all_columns = false;

  /*! \brief Reduced, no adjacent zeros (the class of adjacency-free functions). */
  bool in_phi() const noexcept { return is_reduced && !has_adjacent_zeros; }

  /*! \brief Membership in the class with all column weights at least `lambda`. */
  bool in_phi( std::size_t lambda ) const noexcept { return in_phi() && min_column_weight >= lambda; }
};

inline bool has_adjacent_rows( zero_matrix const& m )
{
  for ( std::size_t a = 0; a < m.k(); ++a )
  {
    for ( std::size_t b = a + 1; b < m.k(); ++b )
    {
      if ( hamming_adjacent( m.row( a ), m.row( b ) ) )
      {
        return true;
      }
    }
  }
  return false;
}

inline class_membership classify_matrix( few_zero_function const& f )
{
  auto const& m = f.matrix();
  auto const k = m.k();
  auto const full = m.all_rows_mask();
  auto const& cols = m.column_words();

  class_membership r;
  r.has_adjacent_zeros = has_adjacent_rows( m );
  r.min_column_weight = k;
  r.ones_le_zeros_all_columns = true;

  bool contiguous = true;
  bool has_complement_pair = false;
  bool has_duplicates = false;
  std::vector<uint64_t> seen;
  seen.reserve( cols.size() );
  for ( std::size_t t = 0; t < cols.size(); ++t )
  {
    auto const c = cols[t];
    auto const ones = static_cast<std::size_t>( std::popcount( c ) );
    if ( c == 0u || c == full )
    {
      r.has_constant_column = true;
    }
    r.min_column_weight = std::min( r.min_column_weight, std::min( ones, k - ones ) );
    if ( ones > k - ones )
    {
      r.ones_le_zeros_all_columns = false;
    }
    if ( t > 0u && cols[t - 1] == c )
    {
      has_duplicates = true;
    }
    else
    {
      seen.push_back( c );
    }
  }
  std::sort( seen.begin(), seen.end() );
  if ( std::adjacent_find( seen.begin(), seen.end() ) != seen.end() )
  {
    /* the same column value starts two different runs */
    contiguous = false;
    has_duplicates = true;
  }
  for ( auto c : seen )
  {
    if ( std::binary_search( seen.begin(), seen.end(), full & ~c ) )
    {
      has_complement_pair = true;
      break;
    }
  }

  r.is_proper = !r.has_constant_column && contiguous && !has_complement_pair;
  r.is_reduced = r.is_proper && !has_duplicates;
  r.is_complete = r.is_reduced && k <= 64u && cols.size() + 1u == ( uint64_t( 1 ) << ( k - 1u ) );
  return r;
}

} // namespace facecover
