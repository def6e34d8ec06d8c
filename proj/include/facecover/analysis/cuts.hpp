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
  \file cuts.hpp
  \brief Cuts of zero matrices and the literal multiplicity lemmas

  A cut of a zero matrix into t parts is a partition of its rows into t
  nonempty blocks; every block keeps all columns.  A literal l admits a
  decomposition on a block when the vectors (restricted to the block) of
  negated literals of other variables that lie inside the vector of l
  together cover it.

  The multiplicity lemma says: if for every cut into t parts some block
  admits no decomposition of l, then l occurs in at least t + 1
  conjunctions of every DNF of f.  The conclusion is cross-checked against
  every optimal prime-implicant DNF for both objectives.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "../canon.hpp"
#include "../conjunction.hpp"
#include "../error.hpp"
#include "../solver.hpp"
#include "../zero_matrix.hpp"

namespace facecover
{

using row_block = std::vector<std::size_t>;
using cut = std::vector<row_block>;

inline constexpr std::size_t max_cut_rows = 10u;

/*! \brief Calls `fn` for every partition of the rows into `t` nonempty blocks.

  Blocks are listed by smallest row, rows inside a block ascending
  (restricted growth strings in lexicographic order).  `fn` may return
  false to stop early.
*/
inline void for_each_cut( std::size_t k, std::size_t t, std::function<bool( cut const& )> const& fn )
{
  if ( t == 0u || t > k )
  {
    throw error( error_kind::invalid_argument, "number of parts must lie in [1, k]" );
  }
  if ( k > max_cut_rows )
  {
    throw error( error_kind::resource_limit, "cut enumeration supports k <= " + std::to_string( max_cut_rows ) );
  }
  std::vector<std::size_t> label( k, 0u );
  bool stop = false;
  auto rec = [&]( auto&& self, std::size_t i, std::size_t used ) -> void {
    if ( stop )
    {
      return;
    }
    if ( k - i < t - used )
    {
      return;
    }
    if ( i == k )
    {
      cut c( t );
      for ( std::size_t r = 0; r < k; ++r )
      {
        c[label[r]].push_back( r );
      }
      stop = !fn( c );
      return;
    }
    for ( std::size_t b = 0; b < used && !stop; ++b )
    {
      label[i] = b;
      self( self, i + 1u, used );
    }
    if ( used < t && !stop )
    {
      label[i] = used;
      self( self, i + 1u, used + 1u );
    }
  };
  rec( rec, 0u, 0u );
}

inline std::vector<cut> enumerate_cuts( zero_matrix const& m, std::size_t t )
{
  std::vector<cut> cuts;
  for_each_cut( m.k(), t, [&]( cut const& c ) {
    cuts.push_back( c );
    return true;
  } );
  return cuts;
}

namespace detail
{

inline uint64_t block_mask( row_block const& block )
{
  uint64_t mask = 0;
  for ( auto r : block )
  {
    mask |= uint64_t( 1 ) << r;
  }
  return mask;
}

} // namespace detail

/*! \brief Whether `l` admits a decomposition on the rows of `rows`.

  A literal whose vector vanishes on the block is accepted: it alone is
  false on every zero of the block.
*/
inline bool admits_decomposition( few_zero_function const& f, literal l, uint64_t rows )
{
  auto const alpha = literal_word( f, l ) & rows;
  if ( alpha == 0u )
  {
    return true;
  }
  uint64_t acc = 0;
  for ( std::size_t v = 0; v < f.n(); ++v )
  {
    if ( v == l.var )
    {
      continue;
    }
    for ( bool p : { true, false } )
    {
      auto const part = literal_word( f, { v, p } ) & rows;
      if ( ( part & ~alpha ) == 0u )
      {
        acc |= part;
      }
    }
  }
  return acc == alpha;
}

/*! \brief Whether the negations of the other literals of `c` decompose `l` on `rows`. */
inline bool defines_decomposition( few_zero_function const& f, conjunction const& c, literal l, uint64_t rows )
{
  auto const alpha = literal_word( f, l ) & rows;
  uint64_t acc = 0;
  for ( auto const& x : c.literals() )
  {
    if ( x == l )
    {
      continue;
    }
    auto const part = literal_word( f, x.negated() ) & rows;
    if ( part & ~alpha )
    {
      return false;
    }
    acc |= part;
  }
  return acc == alpha;
}

/*! \brief For every cut into t parts some block admits no decomposition of `l`. */
inline bool multiplicity_hypothesis( few_zero_function const& f, literal l, std::size_t t )
{
  bool holds = true;
  for_each_cut( f.k(), t, [&]( cut const& c ) {
    bool blocked = std::any_of( c.begin(), c.end(), [&]( auto const& b ) { return !admits_decomposition( f, l, detail::block_mask( b ) ); } );
    holds = holds && blocked;
    return holds;
  } );
  return holds;
}

/*! \brief Hypothesis of the companion lemma for the conjunctions of `d` containing `l`.

  With t the multiplicity of `l` in `d`: for every cut into t parts some
  block admits no decomposition of `l` defined by a selected conjunction.
  Its conclusion (one more conjunction containing `l`) cannot hold for the
  selection of all such conjunctions, so a true hypothesis is a violation.
*/
inline bool selection_hypothesis( few_zero_function const& f, dnf const& d, literal l )
{
  std::vector<conjunction> selected;
  for ( auto const& c : d )
  {
    if ( c.contains( l ) )
    {
      selected.push_back( c );
    }
  }
  auto const t = selected.size();
  if ( t == 0u || t > f.k() )
  {
    return false;
  }
  bool holds = true;
  for_each_cut( f.k(), t, [&]( cut const& c ) {
    bool blocked = std::any_of( c.begin(), c.end(), [&]( auto const& b ) {
      auto const rows = detail::block_mask( b );
      return std::none_of( selected.begin(), selected.end(), [&]( auto const& s ) { return defines_decomposition( f, s, l, rows ); } );
    } );
    holds = holds && blocked;
    return holds;
  } );
  return holds;
}

struct cut_lemma_report
{
  literal lit;
  std::size_t t = 0;
  bool in_phi = false; /* f reduced and adjacency-free */
  bool hypothesis_holds = false;
  /* only meaningful when the hypothesis holds */
  bool conclusion_holds_on_all_checked_dnfs = true;
  std::size_t dnfs_checked = 0;
  std::size_t min_multiplicity = 0;
  /* DNFs among the checked ones where the companion lemma's hypothesis holds */
  std::size_t selection_violations = 0;
};

inline constexpr std::size_t max_cut_lemma_vars = 10u;
inline constexpr std::size_t max_cut_lemma_rows = 6u;

/*! \brief Evaluates the multiplicity lemma for `l` and `t` on f and checks
  it against every optimal prime-implicant DNF (rank and length). */
inline cut_lemma_report verify_cut_lemma( few_zero_function const& f, literal l, std::size_t t, solve_options const& options = {} )
{
  if ( f.k() > max_cut_lemma_rows || f.n() > max_cut_lemma_vars )
  {
    throw error( error_kind::resource_limit, "cut lemma verification supports k <= 6 and n <= 10" );
  }
  if ( l.var >= f.n() )
  {
    throw error( error_kind::index_out_of_range, "literal variable beyond n" );
  }
  cut_lemma_report r;
  r.lit = l;
  r.t = t;
  r.in_phi = classify_matrix( f ).in_phi();
  r.hypothesis_holds = multiplicity_hypothesis( f, l, t );
  r.min_multiplicity = std::numeric_limits<std::size_t>::max();
  for ( auto goal : { objective::rank, objective::length } )
  {
    for ( auto const& d : all_minimal_dnfs( f, goal, options ) )
    {
      ++r.dnfs_checked;
      auto const mult = d.multiplicity( l );
      r.min_multiplicity = std::min( r.min_multiplicity, mult );
      if ( r.hypothesis_holds && mult < t + 1u )
      {
        r.conclusion_holds_on_all_checked_dnfs = false;
      }
      if ( selection_hypothesis( f, d, l ) )
      {
        ++r.selection_violations;
      }
    }
  }
  if ( r.dnfs_checked == 0u )
  {
    r.min_multiplicity = 0;
  }
  return r;
}

} // namespace facecover
