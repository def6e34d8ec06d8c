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
  \file canon.hpp
  \brief Shannon-Povarov transforms, proper/reduced forms and generators

  A Shannon-Povarov transform permutes the variables and negates some of
  them.  It does not change the rank or length of a minimal DNF, so every
  function without constant columns can be brought into proper form
  (ones <= zeros in each column, equal columns adjacent, at most one column
  of each complementary pair) and then into reduced form by dropping
  repeated columns.  The reduced function F and the grouping of equal
  columns give back a DNF of the proper function:

      D(x) = D_F(x_{i_1}, ..., x_{i_t}) | chain(group_1) | ... | chain(group_t)

  with one cyclic chain x_a ~x_b | x_b ~x_c | ... | x_z ~x_a per group of two
  or more equal columns.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "conjunction.hpp"
#include "error.hpp"
#include "zero_matrix.hpp"

namespace facecover
{

/*! \brief Variable permutation plus negation mask.

  Applying the transform to f gives the function whose column j is column
  `perm[j]` of f, complemented when `neg[j]` is set.
*/
struct sp_transform
{
  std::vector<std::size_t> perm;
  bit_vector neg;

  static sp_transform identity( std::size_t n )
  {
    sp_transform t;
    t.perm.resize( n );
    std::iota( t.perm.begin(), t.perm.end(), std::size_t( 0 ) );
    t.neg = bit_vector( n );
    return t;
  }

  std::size_t size() const noexcept { return perm.size(); }

  void validate() const
  {
    if ( neg.size() != perm.size() )
    {
      throw error( error_kind::arity_mismatch, "negation mask and permutation differ in length" );
    }
    std::vector<char> seen( perm.size(), 0 );
    for ( auto p : perm )
    {
      if ( p >= perm.size() || seen[p] )
      {
        throw error( error_kind::invalid_argument, "transform permutation is not a bijection" );
      }
      seen[p] = 1;
    }
  }

  sp_transform inverse() const
  {
    validate();
    sp_transform t;
    t.perm.resize( perm.size() );
    t.neg = bit_vector( perm.size() );
    for ( std::size_t j = 0; j < perm.size(); ++j )
    {
      t.perm[perm[j]] = j;
      t.neg.set( perm[j], neg.get( j ) );
    }
    return t;
  }

  /*! \brief The transform that applies `first` and then `second`. */
  static sp_transform compose( sp_transform const& first, sp_transform const& second )
  {
    first.validate();
    second.validate();
    if ( first.size() != second.size() )
    {
      throw error( error_kind::arity_mismatch, "composing transforms of different arity" );
    }
    sp_transform t;
    t.perm.resize( first.size() );
    t.neg = bit_vector( first.size() );
    for ( std::size_t j = 0; j < first.size(); ++j )
    {
      auto const mid = second.perm[j];
      t.perm[j] = first.perm[mid];
      t.neg.set( j, first.neg.get( mid ) != second.neg.get( j ) );
    }
    return t;
  }

  friend bool operator==( sp_transform const&, sp_transform const& ) = default;
};

inline few_zero_function apply_transform( few_zero_function const& f, sp_transform const& t )
{
  if ( t.size() != f.n() )
  {
    throw error( error_kind::arity_mismatch, "transform on " + std::to_string( t.size() ) + " variables applied to a function of " + std::to_string( f.n() ) );
  }
  t.validate();
  auto const full = f.matrix().all_rows_mask();
  std::vector<uint64_t> cols( f.n() );
  for ( std::size_t j = 0; j < f.n(); ++j )
  {
    cols[j] = f.matrix().column_word( t.perm[j] ) ^ ( t.neg.get( j ) ? full : 0u );
  }
  return few_zero_function( zero_matrix::from_columns( cols, f.k(), { f.n() } ) );
}

/*! \brief Maps a conjunction of f to the corresponding conjunction of apply_transform(f, t). */
inline conjunction transform_conjunction( conjunction const& c, sp_transform const& t )
{
  auto const inv = t.inverse();
  conjunction r;
  for ( auto const& l : c.literals() )
  {
    auto const j = inv.perm[l.var];
    r.add( { j, l.positive != t.neg.get( j ) } );
  }
  return r;
}

struct proper_form
{
  few_zero_function function;
  sp_transform transform;
};

/*! \brief Brings f into proper form by column negations and a column sort.

  Columns with more ones than zeros are negated.  A balanced column keeps
  its polarity unless its complement also occurs, in which case both are
  mapped to the member whose first entry is 0.  Columns are then sorted by
  value; rows are re-sorted afterwards, which keeps equal columns adjacent.
*/
inline proper_form to_proper( few_zero_function const& f )
{
  auto const k = f.k();
  auto const full = f.matrix().all_rows_mask();
  auto const& cols = f.matrix().column_words();

  std::vector<uint64_t> balanced;
  for ( auto c : cols )
  {
    if ( c == 0u || c == full )
    {
      throw error( error_kind::constant_column, "a constant column cannot be made proper" );
    }
    if ( 2u * static_cast<std::size_t>( std::popcount( c ) ) == k )
    {
      balanced.push_back( c );
    }
  }
  std::sort( balanced.begin(), balanced.end() );

  sp_transform t = sp_transform::identity( f.n() );
  std::vector<uint64_t> normalized( f.n() );
  for ( std::size_t j = 0; j < f.n(); ++j )
  {
    auto const c = cols[j];
    auto const ones = static_cast<std::size_t>( std::popcount( c ) );
    bool negate = 2u * ones > k;
    if ( 2u * ones == k && ( c & 1u ) && std::binary_search( balanced.begin(), balanced.end(), full & ~c ) )
    {
      negate = true;
    }
    normalized[j] = negate ? ( full & ~c ) : c;
  }
  std::stable_sort( t.perm.begin(), t.perm.end(), [&]( auto a, auto b ) { return column_word_less( normalized[a], normalized[b] ); } );
  std::vector<uint64_t> sorted( f.n() );
  for ( std::size_t j = 0; j < f.n(); ++j )
  {
    sorted[j] = normalized[t.perm[j]];
    t.neg.set( j, sorted[j] != cols[t.perm[j]] );
  }
  return { few_zero_function( zero_matrix::from_columns( sorted, k, { f.n() } ) ), std::move( t ) };
}

/*! \brief Maximal runs of equal columns of a proper matrix (0-based, half-open). */
struct column_grouping
{
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::vector<std::size_t> representatives;

  std::size_t num_vars() const noexcept { return groups.empty() ? 0u : groups.back().second; }

  /*! \brief Number of columns lying in groups of size two or more. */
  std::size_t grouped_columns() const noexcept
  {
    std::size_t c = 0;
    for ( auto const& [b, e] : groups )
    {
      if ( e - b >= 2u )
      {
        c += e - b;
      }
    }
    return c;
  }

  friend bool operator==( column_grouping const&, column_grouping const& ) = default;
};

struct reduced_form
{
  few_zero_function function;
  column_grouping grouping;
};

inline reduced_form extract_reduced( few_zero_function const& f_proper )
{
  if ( !classify_matrix( f_proper ).is_proper )
  {
    throw error( error_kind::not_proper, "extract_reduced needs a proper function" );
  }
  auto const& cols = f_proper.matrix().column_words();
  column_grouping g;
  std::vector<uint64_t> reps;
  for ( std::size_t j = 0; j < cols.size(); )
  {
    auto e = j + 1u;
    while ( e < cols.size() && cols[e] == cols[j] )
    {
      ++e;
    }
    g.groups.emplace_back( j, e );
    g.representatives.push_back( j );
    reps.push_back( cols[j] );
    j = e;
  }
  return { few_zero_function( zero_matrix::from_columns( reps, f_proper.k(), { f_proper.n() } ) ), std::move( g ) };
}

/*! \brief Cyclic chain x_{v1} ~x_{v2} | x_{v2} ~x_{v3} | ... | x_{vm} ~x_{v1}.

  It is 1 exactly when the listed variables are not all equal.
*/
inline dnf d2_chain( std::vector<std::size_t> const& vars )
{
  if ( vars.size() < 2u )
  {
    throw error( error_kind::invalid_argument, "a chain needs at least two variables" );
  }
  auto sorted = vars;
  std::sort( sorted.begin(), sorted.end() );
  if ( std::adjacent_find( sorted.begin(), sorted.end() ) != sorted.end() )
  {
    throw error( error_kind::invalid_argument, "chain variables must be distinct" );
  }
  std::vector<conjunction> terms;
  for ( std::size_t s = 0; s < vars.size(); ++s )
  {
    terms.push_back( conjunction{ pos( vars[s] ), neg( vars[( s + 1u ) % vars.size()] ) } );
  }
  return dnf( std::move( terms ) );
}

/*! \brief DNF of the proper function from a DNF of its reduced function. */
inline dnf compose_reduction( dnf const& reduced_dnf, column_grouping const& grouping )
{
  auto const t = grouping.representatives.size();
  if ( reduced_dnf.support() >> t )
  {
    throw error( error_kind::arity_mismatch, "DNF uses variables beyond the " + std::to_string( t ) + " representatives" );
  }
  std::vector<conjunction> terms;
  for ( auto const& c : reduced_dnf )
  {
    conjunction r;
    for ( auto const& l : c.literals() )
    {
      r.add( { grouping.representatives[l.var], l.positive } );
    }
    terms.push_back( r );
  }
  for ( auto const& [b, e] : grouping.groups )
  {
    if ( e - b < 2u )
    {
      continue;
    }
    std::vector<std::size_t> vars( e - b );
    std::iota( vars.begin(), vars.end(), b );
    auto const chain = d2_chain( vars );
    terms.insert( terms.end(), chain.begin(), chain.end() );
  }
  return dnf( std::move( terms ) );
}

inline constexpr std::size_t max_generator_k = 20u;

namespace detail
{

/* representative of the class {c, ~c}: fewer ones, ties to the member with first entry 0 */
inline bool is_class_representative( uint64_t c, std::size_t k )
{
  auto const ones = static_cast<std::size_t>( std::popcount( c ) );
  if ( 2u * ones != k )
  {
    return 2u * ones < k;
  }
  return ( c & 1u ) == 0u;
}

inline std::vector<uint64_t> class_representatives( std::size_t k, std::size_t min_weight )
{
  std::vector<uint64_t> cols;
  auto const full = low_mask( k );
  for ( uint64_t c = 1u; c < full; ++c )
  {
    if ( is_class_representative( c, k ) && static_cast<std::size_t>( std::popcount( c ) ) >= min_weight )
    {
      cols.push_back( c );
    }
  }
  std::sort( cols.begin(), cols.end(), column_word_less );
  return cols;
}

inline void check_generator_k( std::size_t k, std::size_t lowest )
{
  if ( k < lowest || k > max_generator_k )
  {
    throw error( error_kind::invalid_argument, "k = " + std::to_string( k ) + " outside [" + std::to_string( lowest ) + ", " + std::to_string( max_generator_k ) + "]" );
  }
}

} // namespace detail

/*! \brief The complete function with k zeros: one column per complementary pair. */
inline few_zero_function complete_function( std::size_t k )
{
  detail::check_generator_k( k, 2u );
  auto const cols = detail::class_representatives( k, 1u );
  return few_zero_function( zero_matrix::from_columns( cols, k, { cols.size() } ) );
}

struct hk_result
{
  few_zero_function function;
  std::size_t threshold = 0;
  std::size_t columns = 0;
  bool count_bound_holds = false; /* columns >= 2^{k-1} (1 - 2/k) */
  bool has_adjacent_zeros = false;
};

/*! \brief Column-weight threshold max(1, ceil(k/2 - sqrt(k ln k))). */
inline std::size_t hk_threshold( std::size_t k )
{
  auto const kk = static_cast<long double>( k );
  auto const v = std::ceil( kk / 2.0L - std::sqrt( kk * std::log( kk ) ) );
  return v < 1.0L ? 1u : static_cast<std::size_t>( v );
}

/*! \brief Matrix with every class representative of weight at least hk_threshold(k). */
inline hk_result hk_function( std::size_t k )
{
  detail::check_generator_k( k, 4u );
  auto const threshold = hk_threshold( k );
  auto const cols = detail::class_representatives( k, threshold );
  hk_result r{ few_zero_function( zero_matrix::from_columns( cols, k, { cols.size() } ) ), threshold, cols.size(), false, false };
  /* columns * k >= 2^{k-1} (k - 2), exactly in integers */
  r.count_bound_holds = static_cast<uint64_t>( r.columns ) * k >= ( uint64_t( 1 ) << ( k - 1u ) ) * ( k - 2u );
  r.has_adjacent_zeros = has_adjacent_rows( r.function.matrix() );
  return r;
}

} // namespace facecover
