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
  \file solver.hpp
  \brief Exact minimal-rank and shortest DNFs of few-zero functions

  A minimal DNF is an optimal cover of the ones of f by faces of
  implicants.  Every implicant extends to a prime implicant with no more
  literals, so both objectives have an optimum made of prime implicants and
  the search is restricted to them.

  The covering instance keeps one element per distinct set of covering
  primes, drops elements whose covering set contains another element's
  set, and is solved by branch and bound: branch on the uncovered element
  with the fewest candidate primes, bound with the larger of a disjoint
  packing bound and a fractional cost-sharing bound.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conjunction.hpp"
#include "error.hpp"
#include "implicants.hpp"
#include "zero_matrix.hpp"

namespace facecover
{

enum class objective
{
  rank,
  length
};

inline std::string_view to_string( objective o ) { return o == objective::rank ? "rank" : "length"; }

inline std::size_t measure( dnf const& d, objective o ) { return o == objective::rank ? d.rank() : d.length(); }

inline constexpr std::size_t max_exhaustive_vars = 24u;

struct solve_options
{
  /* 0 means unlimited; the search stops deterministically after this many nodes */
  uint64_t node_budget = 0;
  std::size_t max_optima = 1'000'000u;
  implicant_options implicants = {};
};

struct solve_result
{
  dnf formula;
  std::size_t optimum = 0;
  objective goal = objective::rank;
  uint64_t nodes_explored = 0;
  bool proved_optimal = false;
};

namespace detail
{

/* Subtracts the faces of d from the cube; what remains must consist of zeros of f. */
inline bool covers_ones_by_subtraction( few_zero_function const& f, dnf const& d, std::size_t max_cubes )
{
  struct cube
  {
    uint64_t care;
    uint64_t value;
  };
  auto const n = f.n();
  std::vector<cube> region{ { 0u, 0u } };
  for ( auto const& t : d )
  {
    std::vector<cube> next;
    for ( auto const& c : region )
    {
      auto const fixed_pos = c.care & c.value;
      auto const fixed_neg = c.care & ~c.value;
      if ( ( t.pos_mask() & fixed_neg ) || ( t.neg_mask() & fixed_pos ) )
      {
        next.push_back( c );
        continue;
      }
      auto cur = c;
      for ( auto free = t.support() & ~c.care; free != 0u; free &= free - 1u )
      {
        auto const bit = free & ( ~free + 1u );
        auto const want = ( t.pos_mask() & bit ) ? bit : 0u;
        next.push_back( { cur.care | bit, ( cur.value & ~bit ) | ( want ^ bit ) } );
        cur.care |= bit;
        cur.value = ( cur.value & ~bit ) | want;
      }
    }
    region = std::move( next );
    if ( region.size() > max_cubes )
    {
      throw error( error_kind::resource_limit, "face subtraction exceeded " + std::to_string( max_cubes ) + " cubes" );
    }
  }
  /* a leftover cube is fine when all of its points are zeros */
  auto const& zeros = f.zero_words();
  for ( auto const& c : region )
  {
    auto const free = n - static_cast<std::size_t>( std::popcount( c.care ) );
    if ( free >= 64u || ( std::size_t( 1 ) << free ) > zeros.size() )
    {
      return false;
    }
    auto const inside = std::count_if( zeros.begin(), zeros.end(), [&c]( uint64_t z ) { return ( z & c.care ) == c.value; } );
    if ( static_cast<std::size_t>( inside ) != ( std::size_t( 1 ) << free ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace detail

/*! \brief D(p) = f(p) for every point of the cube.

  Exhaustive for n <= 24.  Beyond that: every conjunction must be an
  implicant and subtracting all faces from the cube must leave only zeros.
*/
inline bool realizes( few_zero_function const& f, dnf const& d, std::size_t max_cubes = 1u << 22 )
{
  f.matrix().require_word_points();
  for ( auto const& t : d )
  {
    detail::check_conjunction_arity( f, t );
  }
  auto const n = f.n();
  if ( n <= max_exhaustive_vars )
  {
    auto const& zeros = f.zero_words();
    uint64_t const total = uint64_t( 1 ) << n;
    /* zeros first: no face may contain one */
    for ( auto z : zeros )
    {
      if ( d.evaluate( z ) )
      {
        return false;
      }
    }
    for ( uint64_t p = 0; p < total; ++p )
    {
      if ( !d.evaluate( p ) && !std::binary_search( zeros.begin(), zeros.end(), p ) )
      {
        return false;
      }
    }
    return true;
  }
  for ( auto const& t : d )
  {
    if ( !is_implicant( f, t ) )
    {
      return false;
    }
  }
  return detail::covers_ones_by_subtraction( f, d, max_cubes );
}

namespace detail
{

/* Covering instance: prime implicants and one element per inclusion-minimal
   set of covering primes, sorted by the number of candidates. */
struct cover_instance
{
  std::vector<conjunction> primes;
  std::vector<std::size_t> cost;
  std::vector<std::vector<std::size_t>> candidates;

  std::size_t num_elements() const noexcept { return candidates.size(); }

  std::size_t cost_of( std::vector<std::size_t> const& picked ) const
  {
    std::size_t c = 0;
    for ( auto j : picked )
    {
      c += cost[j];
    }
    return c;
  }
};

inline cover_instance build_cover_instance( few_zero_function const& f, objective goal, implicant_options const& iopts )
{
  f.matrix().require_word_points();
  auto const n = f.n();
  if ( n > max_exhaustive_vars )
  {
    throw error( error_kind::resource_limit, "exact covering enumerates the cube and supports n <= 24" );
  }
  cover_instance inst;
  inst.primes = enumerate_prime_implicants( f, iopts );
  auto const np = inst.primes.size();
  for ( auto const& p : inst.primes )
  {
    inst.cost.push_back( goal == objective::rank ? p.rank() : 1u );
  }
  auto const pw = ( np + 63u ) / 64u;

  struct vec_hash
  {
    std::size_t operator()( std::vector<uint64_t> const& v ) const noexcept
    {
      std::size_t h = 0;
      for ( auto w : v )
      {
        h ^= w + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
      }
      return h;
    }
  };
  std::unordered_map<std::vector<uint64_t>, std::size_t, vec_hash> unique;
  std::vector<std::vector<uint64_t>> sets;

  auto const& zeros = f.zero_words();
  uint64_t const total = uint64_t( 1 ) << n;
  std::vector<uint64_t> s( pw );
  for ( uint64_t p = 0; p < total; ++p )
  {
    if ( std::binary_search( zeros.begin(), zeros.end(), p ) )
    {
      continue;
    }
    std::fill( s.begin(), s.end(), 0u );
    for ( std::size_t j = 0; j < np; ++j )
    {
      if ( inst.primes[j].covers( p ) )
      {
        s[j >> 6] |= uint64_t( 1 ) << ( j & 63u );
      }
    }
    if ( unique.emplace( s, sets.size() ).second )
    {
      sets.push_back( s );
    }
  }
  unique.clear();

  /* covering an element also covers every element whose candidate set contains its own */
  std::vector<std::size_t> counts( sets.size() );
  std::vector<uint64_t> sigs( sets.size() );
  for ( std::size_t e = 0; e < sets.size(); ++e )
  {
    std::size_t c = 0;
    uint64_t sig = 0;
    for ( auto w : sets[e] )
    {
      c += static_cast<std::size_t>( std::popcount( w ) );
      sig |= w;
    }
    counts[e] = c;
    sigs[e] = sig;
  }
  std::vector<std::size_t> order( sets.size() );
  std::iota( order.begin(), order.end(), std::size_t( 0 ) );
  std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) { return counts[a] < counts[b]; } );
  std::vector<std::size_t> kept;
  for ( auto e : order )
  {
    bool dominated = false;
    for ( auto q : kept )
    {
      if ( ( sigs[q] & ~sigs[e] ) != 0u || counts[q] == counts[e] )
      {
        continue;
      }
      bool subset = true;
      for ( std::size_t w = 0; w < pw && subset; ++w )
      {
        subset = ( sets[q][w] & ~sets[e][w] ) == 0u;
      }
      if ( subset )
      {
        dominated = true;
        break;
      }
    }
    if ( !dominated )
    {
      kept.push_back( e );
    }
  }

  inst.candidates.resize( kept.size() );
  for ( std::size_t e = 0; e < kept.size(); ++e )
  {
    auto const& set = sets[kept[e]];
    for ( std::size_t w = 0; w < pw; ++w )
    {
      for ( auto bits = set[w]; bits != 0u; bits &= bits - 1u )
      {
        inst.candidates[e].push_back( w * 64u + static_cast<std::size_t>( std::countr_zero( bits ) ) );
      }
    }
  }
  return inst;
}

/* Elements of the instance not covered by `picked`. */
inline std::vector<std::size_t> uncovered_elements( cover_instance const& inst, std::vector<std::size_t> const& picked )
{
  std::vector<char> in( inst.primes.size(), 0 );
  for ( auto j : picked )
  {
    in[j] = 1;
  }
  std::vector<std::size_t> out;
  for ( std::size_t e = 0; e < inst.num_elements(); ++e )
  {
    if ( std::none_of( inst.candidates[e].begin(), inst.candidates[e].end(), [&]( auto j ) { return in[j] != 0; } ) )
    {
      out.push_back( e );
    }
  }
  return out;
}

/* Drops picked primes whose elements stay covered, last picked first. */
inline void remove_redundant( cover_instance const& inst, std::vector<std::size_t>& picked )
{
  std::vector<std::size_t> times( inst.num_elements(), 0u );
  std::vector<std::vector<std::size_t>> elems( inst.primes.size() );
  for ( std::size_t e = 0; e < inst.num_elements(); ++e )
  {
    for ( auto j : inst.candidates[e] )
    {
      elems[j].push_back( e );
    }
  }
  for ( auto j : picked )
  {
    for ( auto e : elems[j] )
    {
      ++times[e];
    }
  }
  for ( std::size_t i = picked.size(); i-- > 0; )
  {
    auto const j = picked[i];
    if ( std::all_of( elems[j].begin(), elems[j].end(), [&]( auto e ) { return times[e] >= 2u; } ) )
    {
      for ( auto e : elems[j] )
      {
        --times[e];
      }
      picked.erase( picked.begin() + static_cast<std::ptrdiff_t>( i ) );
    }
  }
}

/* Greedy completion of `picked`: best newly-covered/cost ratio, ties to the
   smaller prime index, followed by redundancy removal. */
inline std::vector<std::size_t> greedy_cover( cover_instance const& inst, std::vector<std::size_t> picked = {} )
{
  auto const np = inst.primes.size();
  std::vector<std::vector<std::size_t>> elems( np );
  for ( std::size_t e = 0; e < inst.num_elements(); ++e )
  {
    for ( auto j : inst.candidates[e] )
    {
      elems[j].push_back( e );
    }
  }
  std::vector<char> covered( inst.num_elements(), 0 );
  std::vector<std::size_t> gain( np, 0u );
  for ( std::size_t j = 0; j < np; ++j )
  {
    gain[j] = elems[j].size();
  }
  auto take = [&]( std::size_t j ) {
    for ( auto e : elems[j] )
    {
      if ( !covered[e] )
      {
        covered[e] = 1;
        for ( auto q : inst.candidates[e] )
        {
          --gain[q];
        }
      }
    }
  };
  for ( auto j : picked )
  {
    take( j );
  }
  while ( true )
  {
    std::size_t best = np;
    for ( std::size_t j = 0; j < np; ++j )
    {
      if ( gain[j] == 0u )
      {
        continue;
      }
      if ( best == np || gain[j] * inst.cost[best] > gain[best] * inst.cost[j] )
      {
        best = j;
      }
    }
    if ( best == np )
    {
      break;
    }
    picked.push_back( best );
    take( best );
  }
  remove_redundant( inst, picked );
  return picked;
}

/* Branch and bound over a subset of the elements of an instance. */
class branch_and_bound
{
public:
  branch_and_bound( cover_instance const& inst, std::vector<std::size_t> const& active, bool collect_all, uint64_t node_budget, std::size_t max_optima )
      : inst_( inst ), collect_all_( collect_all ), node_budget_( node_budget ), max_optima_( max_optima )
  {
    auto const np = inst.primes.size();
    words_ = ( active.size() + 63u ) / 64u;
    covers_.assign( np, std::vector<uint64_t>( words_, 0u ) );
    candidates_.resize( active.size() );
    for ( std::size_t a = 0; a < active.size(); ++a )
    {
      candidates_[a] = inst.candidates[active[a]];
      for ( auto j : candidates_[a] )
      {
        covers_[j][a >> 6] |= uint64_t( 1 ) << ( a & 63u );
      }
    }
    excluded_.assign( np, 0 );
    used_mark_.assign( np, 0 );
    slack_.assign( np, 0 );
    if ( !collect_all_ )
    {
      remove_dominated_primes();
    }
  }

  /* `bound` is achieved by `incumbent`; in enumeration mode it is the optimum.
     `floor` is a known lower bound: a cover reaching it ends the search. */
  void run( std::size_t bound, std::vector<std::size_t> incumbent, std::size_t floor = 0u )
  {
    best_ = bound;
    floor_ = floor;
    best_set_ = std::move( incumbent );
    std::vector<uint64_t> uncovered( words_, 0u );
    for ( std::size_t a = 0; a < candidates_.size(); ++a )
    {
      uncovered[a >> 6] |= uint64_t( 1 ) << ( a & 63u );
    }
    search( uncovered, 0u );
  }

  std::size_t best() const noexcept { return best_; }
  std::vector<std::size_t> const& best_set() const noexcept { return best_set_; }
  std::vector<std::vector<std::size_t>> const& optima() const noexcept { return optima_; }
  uint64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

private:
  /* a prime covering a subset of another prime's elements at no lower cost is never needed */
  void remove_dominated_primes()
  {
    auto const np = inst_.primes.size();
    std::vector<std::size_t> sizes( np );
    for ( std::size_t j = 0; j < np; ++j )
    {
      sizes[j] = 0;
      for ( auto w : covers_[j] )
      {
        sizes[j] += static_cast<std::size_t>( std::popcount( w ) );
      }
    }
    for ( std::size_t j = 0; j < np; ++j )
    {
      if ( sizes[j] == 0u )
      {
        excluded_[j] = 1;
        continue;
      }
      for ( std::size_t q = 0; q < np && !excluded_[j]; ++q )
      {
        if ( q == j || excluded_[q] || inst_.cost[q] > inst_.cost[j] || sizes[q] < sizes[j] )
        {
          continue;
        }
        if ( sizes[q] == sizes[j] && inst_.cost[q] == inst_.cost[j] && q > j )
        {
          continue;
        }
        bool subset = true;
        for ( std::size_t w = 0; w < words_ && subset; ++w )
        {
          subset = ( covers_[j][w] & ~covers_[q][w] ) == 0u;
        }
        if ( subset )
        {
          excluded_[j] = 1;
        }
      }
    }
  }

  /* max of a disjoint-packing bound, a dual-ascent bound and a cost-sharing bound */
  std::size_t lower_bound( std::vector<uint64_t> const& uncovered )
  {
    ++stamp_;
    std::size_t packing = 0;
    std::size_t ascent = 0;
    double sharing = 0.0;
    for ( std::size_t j = 0; j < slack_.size(); ++j )
    {
      slack_[j] = inst_.cost[j];
    }
    for ( std::size_t w = 0; w < words_; ++w )
    {
      for ( auto bits = uncovered[w]; bits != 0u; bits &= bits - 1u )
      {
        auto const e = w * 64u + static_cast<std::size_t>( std::countr_zero( bits ) );
        bool disjoint = true;
        std::size_t min_cost = std::numeric_limits<std::size_t>::max();
        std::size_t min_slack = std::numeric_limits<std::size_t>::max();
        double min_share = std::numeric_limits<double>::infinity();
        for ( auto j : candidates_[e] )
        {
          if ( excluded_[j] )
          {
            continue;
          }
          disjoint = disjoint && used_mark_[j] != stamp_;
          min_cost = std::min( min_cost, inst_.cost[j] );
          min_slack = std::min( min_slack, slack_[j] );
          min_share = std::min( min_share, static_cast<double>( inst_.cost[j] ) / static_cast<double>( gain_[j] ) );
        }
        sharing += min_share;
        ascent += min_slack;
        for ( auto j : candidates_[e] )
        {
          if ( !excluded_[j] )
          {
            slack_[j] -= min_slack;
          }
        }
        if ( disjoint )
        {
          packing += min_cost;
          for ( auto j : candidates_[e] )
          {
            used_mark_[j] = stamp_;
          }
        }
      }
    }
    auto const share = static_cast<std::size_t>( std::ceil( sharing - 1e-9 ) );
    return std::max( { packing, ascent, share } );
  }

  bool prune( std::size_t value ) const noexcept { return collect_all_ ? value > best_ : value >= best_; }

  void search( std::vector<uint64_t> const& uncovered, std::size_t cost )
  {
    if ( aborted_ || finished_ )
    {
      return;
    }
    if ( node_budget_ != 0u && nodes_ >= node_budget_ )
    {
      aborted_ = true;
      return;
    }
    ++nodes_;

    if ( std::all_of( uncovered.begin(), uncovered.end(), []( auto w ) { return w == 0u; } ) )
    {
      if ( collect_all_ )
      {
        if ( cost == best_ )
        {
          optima_.push_back( chosen_ );
          if ( optima_.size() > max_optima_ )
          {
            throw error( error_kind::resource_limit, "more than " + std::to_string( max_optima_ ) + " optimal DNFs" );
          }
        }
      }
      else if ( cost < best_ )
      {
        best_ = cost;
        best_set_ = chosen_;
        finished_ = best_ <= floor_;
      }
      return;
    }

    /* gains on the uncovered set and the most constrained element */
    gain_.assign( inst_.primes.size(), 0u );
    std::size_t pick = 0;
    std::size_t pick_count = std::numeric_limits<std::size_t>::max();
    for ( std::size_t w = 0; w < words_; ++w )
    {
      for ( auto bits = uncovered[w]; bits != 0u; bits &= bits - 1u )
      {
        auto const e = w * 64u + static_cast<std::size_t>( std::countr_zero( bits ) );
        std::size_t count = 0;
        for ( auto j : candidates_[e] )
        {
          if ( !excluded_[j] )
          {
            ++count;
            ++gain_[j];
          }
        }
        if ( count < pick_count )
        {
          pick = e;
          pick_count = count;
        }
      }
    }
    if ( pick_count == 0u )
    {
      return;
    }
    if ( prune( cost + lower_bound( uncovered ) ) )
    {
      return;
    }

    std::vector<std::size_t> branch;
    for ( auto j : candidates_[pick] )
    {
      if ( !excluded_[j] )
      {
        branch.push_back( j );
      }
    }
    auto const gains = gain_;
    std::stable_sort( branch.begin(), branch.end(), [&]( auto a, auto b ) {
      return gains[a] * inst_.cost[b] > gains[b] * inst_.cost[a];
    } );

    std::vector<uint64_t> next( words_ );
    std::vector<std::size_t> newly_excluded;
    for ( auto j : branch )
    {
      if ( !prune( cost + inst_.cost[j] ) )
      {
        for ( std::size_t w = 0; w < words_; ++w )
        {
          next[w] = uncovered[w] & ~covers_[j][w];
        }
        chosen_.push_back( j );
        search( next, cost + inst_.cost[j] );
        chosen_.pop_back();
        if ( aborted_ || finished_ )
        {
          break;
        }
      }
      excluded_[j] = 1;
      newly_excluded.push_back( j );
    }
    for ( auto j : newly_excluded )
    {
      excluded_[j] = 0;
    }
  }

  cover_instance const& inst_;
  bool collect_all_;
  uint64_t node_budget_;
  std::size_t max_optima_;
  std::size_t words_ = 0;
  std::vector<std::vector<uint64_t>> covers_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<char> excluded_;
  std::vector<uint64_t> used_mark_;
  std::vector<std::size_t> slack_;
  uint64_t stamp_ = 0;
  std::vector<std::size_t> gain_;
  std::vector<std::size_t> chosen_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_set_;
  std::vector<std::vector<std::size_t>> optima_;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t floor_ = 0;
  bool finished_ = false;
};

inline dnf to_dnf( cover_instance const& inst, std::vector<std::size_t> const& picked )
{
  std::vector<conjunction> terms;
  for ( auto j : picked )
  {
    terms.push_back( inst.primes[j] );
  }
  return dnf( std::move( terms ) );
}

inline constexpr std::size_t initial_active_elements = 64u;

} // namespace detail

/*! \brief Greedy upper bound, built from prime implicants (n <= 24, like the exact solver). */
inline dnf greedy_dnf( few_zero_function const& f, objective goal, implicant_options const& iopts = {} )
{
  auto const inst = detail::build_cover_instance( f, goal, iopts );
  return detail::to_dnf( inst, detail::greedy_cover( inst ) );
}

/*! \brief Optimal DNF for the given objective.

  Branch and bound runs on a growing subset of the elements: the optimum
  on a subset is a lower bound, and once the subset optimum covers every
  element it is optimal.  When the node budget runs out the best complete
  cover found so far is returned with `proved_optimal == false`.
*/
inline solve_result minimal_dnf( few_zero_function const& f, objective goal, solve_options const& options = {} )
{
  auto const inst = detail::build_cover_instance( f, goal, options.implicants );
  auto incumbent = detail::greedy_cover( inst );
  auto incumbent_cost = inst.cost_of( incumbent );

  std::vector<std::size_t> active;
  std::vector<char> is_active( inst.num_elements(), 0 );
  for ( std::size_t e = 0; e < inst.num_elements() && active.size() < detail::initial_active_elements; ++e )
  {
    active.push_back( e );
    is_active[e] = 1;
  }

  uint64_t nodes = 0;
  bool proved = false;
  std::size_t lower = 0; /* optimum on the current subset, a lower bound on the full optimum */
  while ( true )
  {
    if ( incumbent_cost <= lower )
    {
      proved = true;
      break;
    }
    auto const budget = options.node_budget == 0u ? 0u : ( options.node_budget > nodes ? options.node_budget - nodes : 1u );
    detail::branch_and_bound bb( inst, active, false, budget, options.max_optima );
    bb.run( incumbent_cost, incumbent, lower );
    nodes += bb.nodes();
    if ( bb.aborted() )
    {
      break;
    }
    auto const missing = detail::uncovered_elements( inst, bb.best_set() );
    if ( missing.empty() )
    {
      incumbent = bb.best_set();
      incumbent_cost = bb.best();
      proved = true;
      break;
    }
    lower = bb.best();
    /* the subset optimum misses some elements: repair it into a complete cover and grow the subset */
    auto repaired = detail::greedy_cover( inst, bb.best_set() );
    if ( auto const c = inst.cost_of( repaired ); c < incumbent_cost )
    {
      incumbent = std::move( repaired );
      incumbent_cost = c;
    }
    auto const grow = std::max<std::size_t>( detail::initial_active_elements, active.size() / 2u );
    for ( std::size_t i = 0; i < missing.size() && i < grow; ++i )
    {
      active.push_back( missing[i] );
      is_active[missing[i]] = 1;
    }
  }

  solve_result r;
  r.formula = detail::to_dnf( inst, incumbent );
  r.optimum = measure( r.formula, goal );
  r.goal = goal;
  r.nodes_explored = nodes;
  r.proved_optimal = proved;
  return r;
}

/*! \brief Every optimal DNF made of prime implicants (tiny instances only). */
inline std::vector<dnf> all_minimal_dnfs( few_zero_function const& f, objective goal, solve_options const& options = {} )
{
  auto const best = minimal_dnf( f, goal, options );
  if ( !best.proved_optimal )
  {
    throw error( error_kind::resource_limit, "node budget exhausted before the optimum was proved" );
  }
  auto const inst = detail::build_cover_instance( f, goal, options.implicants );
  std::vector<std::size_t> all( inst.num_elements() );
  std::iota( all.begin(), all.end(), std::size_t( 0 ) );
  detail::branch_and_bound bb( inst, all, true, options.node_budget, options.max_optima );
  bb.run( best.optimum, {} );
  if ( bb.aborted() )
  {
    throw error( error_kind::resource_limit, "node budget exhausted while enumerating optima" );
  }
  std::vector<dnf> result;
  for ( auto const& set : bb.optima() )
  {
    result.push_back( detail::to_dnf( inst, set ) );
  }
  std::sort( result.begin(), result.end() );
  return result;
}

} // namespace facecover
