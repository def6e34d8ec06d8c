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
  \file implicants.hpp
  \brief Literal vectors, vector decompositions and prime implicants

  Literal x_j is associated with column j of the zero matrix and ~x_j with
  its complement.  A literal is false on exactly the zeros where its
  complement's vector is 1 (its "kill set"), so a conjunction is an
  implicant iff the vectors of its negated literals cover all k rows, and a
  prime implicant iff that cover is irredundant.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bit_vector.hpp"
#include "conjunction.hpp"
#include "error.hpp"
#include "zero_matrix.hpp"

namespace facecover
{

/*! \brief Associated vector of `l` as a row word (bit i is row i). */
inline uint64_t literal_word( few_zero_function const& f, literal l )
{
  auto const c = f.matrix().column_word( l.var );
  return l.positive ? c : ( f.matrix().all_rows_mask() & ~c );
}

inline bit_vector literal_vector( few_zero_function const& f, literal l )
{
  return bit_vector::from_word( literal_word( f, l ), f.k() );
}

/*! \brief Rows (zeros of f) on which `l` is false. */
inline uint64_t kill_word( few_zero_function const& f, literal l )
{
  return literal_word( f, l.negated() );
}

namespace detail
{

inline void check_decomposition_args( bit_vector const& alpha, std::vector<bit_vector> const& parts )
{
  for ( auto const& p : parts )
  {
    if ( p.size() != alpha.size() )
    {
      throw error( error_kind::length_mismatch, "decomposition parts must have the length of the decomposed vector" );
    }
  }
  if ( alpha.none() )
  {
    throw error( error_kind::invalid_argument, "only nonzero vectors are decomposed" );
  }
}

} // namespace detail

/*! \brief alpha = OR(parts) and every part is orthogonal to ~alpha.

  Zero parts are accepted; they satisfy both conditions vacuously.
*/
inline bool is_decomposition( bit_vector const& alpha, std::vector<bit_vector> const& parts )
{
  detail::check_decomposition_args( alpha, parts );
  auto const outside = alpha.complement();
  bit_vector acc( alpha.size() );
  for ( auto const& p : parts )
  {
    if ( outside.inner_product( p ) != 0u )
    {
      return false;
    }
    acc |= p;
  }
  return acc == alpha;
}

/*! \brief alpha = XOR(parts) = OR(parts): the parts split alpha into disjoint pieces. */
inline bool is_orthogonal_decomposition( bit_vector const& alpha, std::vector<bit_vector> const& parts )
{
  detail::check_decomposition_args( alpha, parts );
  bit_vector acc_or( alpha.size() );
  bit_vector acc_xor( alpha.size() );
  for ( auto const& p : parts )
  {
    acc_or |= p;
    acc_xor ^= p;
  }
  return acc_or == alpha && acc_xor == alpha;
}

namespace detail
{

inline void check_conjunction_arity( few_zero_function const& f, conjunction const& c )
{
  if ( f.n() < 64u && ( c.support() >> f.n() ) != 0u )
  {
    throw error( error_kind::index_out_of_range, "conjunction uses variables beyond n = " + std::to_string( f.n() ) );
  }
}

inline uint64_t killed_rows( few_zero_function const& f, conjunction const& c )
{
  uint64_t killed = 0;
  for ( auto const& l : c.literals() )
  {
    killed |= kill_word( f, l );
  }
  return killed;
}

} // namespace detail

/*! \brief N_K is contained in N_f. */
inline bool is_implicant( few_zero_function const& f, conjunction const& c )
{
  detail::check_conjunction_arity( f, c );
  return detail::killed_rows( f, c ) == f.matrix().all_rows_mask();
}

inline bool is_prime_implicant( few_zero_function const& f, conjunction const& c )
{
  if ( !is_implicant( f, c ) )
  {
    return false;
  }
  auto const full = f.matrix().all_rows_mask();
  for ( auto const& l : c.literals() )
  {
    if ( detail::killed_rows( f, c.without( l ) ) == full )
    {
      return false;
    }
  }
  return true;
}

struct implicant_options
{
  std::size_t max_primes = 5'000'000u;
};

inline constexpr std::size_t max_enumeration_rows = 30u;

/*! \brief All prime implicants of f, sorted.

  Enumerates irredundant covers of the zero rows by literal kill sets with
  a depth-first search that branches on the uncovered row having the
  fewest candidate literals.  A literal that was branched on is excluded
  from later sibling branches, so each cover is produced once.
*/
inline std::vector<conjunction> enumerate_prime_implicants( few_zero_function const& f, implicant_options const& options = {} )
{
  f.matrix().require_word_points();
  auto const k = f.k();
  auto const n = f.n();
  if ( k > max_enumeration_rows )
  {
    throw error( error_kind::precondition_violated, "prime implicant enumeration supports k <= 30" );
  }
  auto const full = f.matrix().all_rows_mask();

  struct lit_info
  {
    literal lit;
    uint64_t kill;
  };
  std::vector<lit_info> lits;
  for ( std::size_t v = 0; v < n; ++v )
  {
    for ( bool p : { true, false } )
    {
      auto const kw = kill_word( f, { v, p } );
      if ( kw != 0u )
      {
        lits.push_back( { { v, p }, kw } );
      }
    }
  }

  std::vector<conjunction> primes;
  std::vector<char> excluded( lits.size(), 0 );
  std::vector<std::size_t> chosen;
  std::vector<uint64_t> privates;
  uint64_t used_vars = 0;

  auto recurse = [&]( auto&& self, uint64_t covered ) -> void {
    if ( covered == full )
    {
      uint64_t pm = 0, nm = 0;
      for ( auto i : chosen )
      {
        ( lits[i].lit.positive ? pm : nm ) |= uint64_t( 1 ) << lits[i].lit.var;
      }
      primes.push_back( conjunction::from_masks( pm, nm ) );
      if ( primes.size() > options.max_primes )
      {
        throw error( error_kind::resource_limit, "more than " + std::to_string( options.max_primes ) + " prime implicants" );
      }
      return;
    }

    /* most constrained uncovered row */
    std::size_t best_row = k;
    std::size_t best_count = lits.size() + 1u;
    for ( auto rest = full & ~covered; rest != 0u; rest &= rest - 1u )
    {
      auto const r = static_cast<std::size_t>( std::countr_zero( rest ) );
      std::size_t count = 0;
      for ( std::size_t i = 0; i < lits.size(); ++i )
      {
        if ( !excluded[i] && ( ( lits[i].kill >> r ) & 1u ) && !( ( used_vars >> lits[i].lit.var ) & 1u ) )
        {
          ++count;
        }
      }
      if ( count < best_count )
      {
        best_count = count;
        best_row = r;
      }
    }
    if ( best_count == 0u )
    {
      return;
    }

    std::vector<std::size_t> branched;
    for ( std::size_t i = 0; i < lits.size(); ++i )
    {
      if ( excluded[i] || !( ( lits[i].kill >> best_row ) & 1u ) || ( ( used_vars >> lits[i].lit.var ) & 1u ) )
      {
        continue;
      }
      auto const kill = lits[i].kill;
      /* adding a literal can only shrink the private rows of earlier ones */
      bool redundant = false;
      for ( auto const& p : privates )
      {
        if ( ( p & ~kill ) == 0u )
        {
          redundant = true;
          break;
        }
      }
      if ( !redundant )
      {
        auto const saved = privates;
        for ( auto& p : privates )
        {
          p &= ~kill;
        }
        privates.push_back( kill & ~covered );
        chosen.push_back( i );
        used_vars |= uint64_t( 1 ) << lits[i].lit.var;

        self( self, covered | kill );

        used_vars &= ~( uint64_t( 1 ) << lits[i].lit.var );
        chosen.pop_back();
        privates = saved;
      }
      excluded[i] = 1;
      branched.push_back( i );
    }
    for ( auto i : branched )
    {
      excluded[i] = 0;
    }
  };
  recurse( recurse, 0u );

  std::sort( primes.begin(), primes.end() );
  return primes;
}

struct decomposition_conjunction
{
  conjunction term;
  bit_vector witness;          /* a point with term[witness] = 1 */
  bool has_zero_parts = false; /* some part vector is zero */
};

/*! \brief Conjunction l & parts built from a decomposition of the vector of `l`.

  Requires the vectors of the negated `parts` to decompose the vector of
  `l`.  A literal whose vector is zero is false on every zero of f; it is
  accepted with no parts.  The result is an implicant of f, and `witness`
  sets the variables of the term to satisfy it and all others to 0.
*/
inline decomposition_conjunction conjunction_from_decomposition( few_zero_function const& f, literal l, std::vector<literal> const& parts )
{
  if ( l.var >= f.n() )
  {
    throw error( error_kind::index_out_of_range, "literal variable beyond n" );
  }
  auto const alpha = literal_vector( f, l );
  std::vector<bit_vector> vectors;
  bool zero_parts = false;
  for ( auto const& p : parts )
  {
    if ( p.var >= f.n() )
    {
      throw error( error_kind::index_out_of_range, "part variable beyond n" );
    }
    vectors.push_back( literal_vector( f, p.negated() ) );
    zero_parts = zero_parts || vectors.back().none();
  }

  bool holds = false;
  if ( alpha.none() )
  {
    holds = parts.empty();
  }
  else
  {
    holds = is_decomposition( alpha, vectors );
  }
  if ( !holds )
  {
    throw error( error_kind::decomposition_hypothesis_fails, "negated parts do not decompose the literal vector" );
  }

  conjunction term;
  try
  {
    term.add( l );
    for ( auto const& p : parts )
    {
      term.add( p );
    }
  }
  catch ( error const& e )
  {
    throw error( error_kind::decomposition_hypothesis_fails, e.detail() );
  }

  bit_vector witness( f.n() );
  for ( auto const& x : term.literals() )
  {
    witness.set( x.var, x.positive );
  }
  return { term, witness, zero_parts };
}

} // namespace facecover
