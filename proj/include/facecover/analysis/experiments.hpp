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
  \file experiments.hpp
  \brief Seeded sampling of adjacency-free functions and Monte-Carlo experiments

  Every trial draws from its own generator, seeded by mixing the run seed
  with the trial index, so results do not depend on how trials are spread
  over worker threads.  The worker count is capped by the environment
  variable FACECOVER_THREADS.
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "../canon.hpp"
#include "../error.hpp"
#include "../solver.hpp"
#include "../zero_matrix.hpp"
#include "bounds.hpp"

namespace facecover
{

/*! \brief splitmix64 finalizer; mixes a run seed with a stream index. */
inline uint64_t derive_seed( uint64_t seed, uint64_t index ) noexcept
{
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * ( index + 1u );
  z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
  return z ^ ( z >> 31 );
}

/*! \brief Worker count: hardware concurrency capped by FACECOVER_THREADS. */
inline std::size_t worker_count()
{
  std::size_t w = std::max( 1u, std::thread::hardware_concurrency() );
  if ( auto const* env = std::getenv( "FACECOVER_THREADS" ) )
  {
    char* end = nullptr;
    auto const cap = std::strtoull( env, &end, 10 );
    if ( end != env && cap > 0u )
    {
      w = std::min<std::size_t>( w, cap );
    }
  }
  return w;
}

/*! \brief Runs fn(i) for i in [0, count) on the worker pool; rethrows the first error. */
template<class Fn>
void parallel_for( std::size_t count, Fn&& fn )
{
  auto const workers = std::min( worker_count(), std::max<std::size_t>( count, 1u ) );
  if ( workers <= 1u )
  {
    for ( std::size_t i = 0; i < count; ++i )
    {
      fn( i );
    }
    return;
  }
  std::atomic<std::size_t> next{ 0 };
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for ( std::size_t w = 0; w < workers; ++w )
  {
    pool.emplace_back( [&] {
      for ( auto i = next++; i < count; i = next++ )
      {
        try
        {
          fn( i );
        }
        catch ( ... )
        {
          std::lock_guard lock( failure_mutex );
          if ( !failure )
          {
            failure = std::current_exception();
          }
          next = count;
        }
      }
    } );
  }
  for ( auto& t : pool )
  {
    t.join();
  }
  if ( failure )
  {
    std::rethrow_exception( failure );
  }
}

struct sample_options
{
  std::size_t max_attempts = 1'000'000u;
};

/*! \brief Uniformly random adjacency-free reduced function with column weights >= lambda.

  Rejection sampling: k distinct rows are drawn uniformly, brought into
  proper form, and accepted when the result is reduced, has no adjacent
  zeros and all column weights are at least `lambda`.
*/
inline few_zero_function sample_phi( std::size_t n, std::size_t k, std::size_t lambda, uint64_t seed, sample_options const& options = {} )
{
  if ( n == 0u || n > max_word_vars || k == 0u || k > max_rows )
  {
    throw error( error_kind::invalid_argument, "sampling needs 1 <= n <= 63 and 1 <= k <= 63" );
  }
  if ( 2u * lambda > k )
  {
    throw error( error_kind::precondition_violated, "column weight " + std::to_string( lambda ) + " exceeds k/2" );
  }
  if ( k < 64u && n < 64u && k > ( uint64_t( 1 ) << n ) )
  {
    throw error( error_kind::precondition_violated, "more zeros than points" );
  }
  /* a reduced matrix uses n distinct column classes of weight >= max(lambda, 1) */
  if ( k <= max_generator_k )
  {
    auto const classes = detail::class_representatives( k, std::max<std::size_t>( lambda, 1u ) ).size();
    if ( n > classes )
    {
      throw error( error_kind::precondition_violated, "only " + std::to_string( classes ) + " column classes of weight >= " + std::to_string( lambda ) + " exist for k = " + std::to_string( k ) );
    }
  }
  std::mt19937_64 rng( derive_seed( seed, 0u ) );
  auto const mask = low_mask( n );
  for ( std::size_t attempt = 0; attempt < options.max_attempts; ++attempt )
  {
    std::vector<uint64_t> rows;
    while ( rows.size() < k )
    {
      auto const r = rng() & mask;
      if ( std::find( rows.begin(), rows.end(), r ) == rows.end() )
      {
        rows.push_back( r );
      }
    }
    std::vector<bit_vector> bits;
    for ( auto r : rows )
    {
      bits.push_back( bit_vector::from_word( r, n ) );
    }
    few_zero_function f( zero_matrix( std::move( bits ) ) );
    auto const raw = classify_matrix( f );
    if ( raw.has_constant_column || raw.has_adjacent_zeros || raw.min_column_weight < lambda )
    {
      continue;
    }
    auto proper = to_proper( f ).function;
    auto const c = classify_matrix( proper );
    if ( c.in_phi( lambda ) && c.ones_le_zeros_all_columns )
    {
      return proper;
    }
  }
  throw error( error_kind::resource_limit, "no sample accepted after " + std::to_string( options.max_attempts ) + " attempts" );
}

struct theorem1_report
{
  std::size_t n = 0, k = 0, trials = 0;
  uint64_t seed = 0;
  std::size_t complete_count = 0;
  double fraction = 0.0;
  double threshold = 0.0;    /* log2 n - log2 log2 n + 1 */
  bool below_threshold = false; /* k < threshold */
};

inline double theorem1_threshold( std::size_t n )
{
  auto const l = std::log2( static_cast<double>( n ) );
  return n < 2u ? 0.0 : l - std::log2( l ) + 1.0;
}

namespace detail
{

/* Matrix with i.i.d. uniformly random non-constant columns; redrawn until the rows are distinct. */
inline few_zero_function random_proper_candidate( std::size_t n, std::size_t k, std::mt19937_64& rng )
{
  auto const values = ( uint64_t( 1 ) << k ) - 2u;
  std::uniform_int_distribution<uint64_t> dist( 1u, values );
  std::vector<uint64_t> cols( n );
  while ( true )
  {
    for ( auto& c : cols )
    {
      c = dist( rng );
    }
    /* distinct rows: some column separates every pair of rows */
    bool distinct = true;
    for ( std::size_t a = 0; a < k && distinct; ++a )
    {
      for ( std::size_t b = a + 1; b < k && distinct; ++b )
      {
        distinct = std::any_of( cols.begin(), cols.end(), [&]( auto c ) { return ( ( c >> a ) & 1u ) != ( ( c >> b ) & 1u ); } );
      }
    }
    if ( distinct )
    {
      return few_zero_function( zero_matrix::from_columns( cols, k, { n } ) );
    }
  }
}

/* Number of column classes under complementation, i.e. the number of
   variables of the reduced form, computed without building it. */
inline std::size_t reduced_variable_count( few_zero_function const& f )
{
  auto const k = f.k();
  auto const full = f.matrix().all_rows_mask();
  std::vector<uint64_t> classes;
  for ( auto c : f.matrix().column_words() )
  {
    auto const ones = static_cast<std::size_t>( std::popcount( c ) );
    if ( 2u * ones > k || ( 2u * ones == k && ( c & 1u ) ) )
    {
      c = full & ~c;
    }
    classes.push_back( c );
  }
  std::sort( classes.begin(), classes.end() );
  return static_cast<std::size_t>( std::unique( classes.begin(), classes.end() ) - classes.begin() );
}

inline bool reduces_to_complete( few_zero_function const& f )
{
  return reduced_variable_count( f ) + 1u == ( std::size_t( 1 ) << ( f.k() - 1u ) );
}

} // namespace detail

/*! \brief Fraction of random proper functions whose reduced form is complete.

  Matrices are uniform among k x n matrices with distinct rows and no
  constant column.  When k is not below the threshold the experiment still
  runs and sets `below_threshold = false`.
*/
inline theorem1_report experiment_theorem1( std::size_t n, std::size_t k, std::size_t trials, uint64_t seed )
{
  if ( trials == 0u )
  {
    throw error( error_kind::invalid_argument, "trials must be positive" );
  }
  if ( k < 2u || k > max_generator_k )
  {
    throw error( error_kind::invalid_argument, "experiment supports 2 <= k <= 20" );
  }
  if ( n == 0u )
  {
    throw error( error_kind::invalid_argument, "n must be positive" );
  }
  theorem1_report r;
  r.n = n;
  r.k = k;
  r.trials = trials;
  r.seed = seed;
  r.threshold = theorem1_threshold( n );
  r.below_threshold = static_cast<double>( k ) < r.threshold;
  std::vector<char> complete( trials, 0 );
  parallel_for( trials, [&]( std::size_t i ) {
    std::mt19937_64 rng( derive_seed( seed, i ) );
    complete[i] = detail::reduces_to_complete( detail::random_proper_candidate( n, k, rng ) ) ? 1 : 0;
  } );
  r.complete_count = static_cast<std::size_t>( std::count( complete.begin(), complete.end(), 1 ) );
  r.fraction = static_cast<double>( r.complete_count ) / static_cast<double>( trials );
  return r;
}

/*! \brief Exact value of the same fraction by enumerating every matrix. */
inline rational theorem1_exact_fraction( std::size_t n, std::size_t k, uint64_t max_matrices = uint64_t( 1 ) << 24 )
{
  if ( k < 2u || k > 6u || n == 0u )
  {
    throw error( error_kind::invalid_argument, "exact enumeration supports 2 <= k <= 6" );
  }
  auto const values = ( uint64_t( 1 ) << k ) - 2u;
  uint64_t total = 1;
  for ( std::size_t j = 0; j < n; ++j )
  {
    if ( total > max_matrices / values )
    {
      throw error( error_kind::resource_limit, "too many matrices to enumerate" );
    }
    total *= values;
  }
  std::vector<uint64_t> cols( n );
  big_int good = 0, all = 0;
  for ( uint64_t code = 0; code < total; ++code )
  {
    auto c = code;
    for ( auto& col : cols )
    {
      col = 1u + c % values;
      c /= values;
    }
    bool distinct = true;
    for ( std::size_t a = 0; a < k && distinct; ++a )
    {
      for ( std::size_t b = a + 1; b < k && distinct; ++b )
      {
        distinct = std::any_of( cols.begin(), cols.end(), [&]( auto x ) { return ( ( x >> a ) & 1u ) != ( ( x >> b ) & 1u ); } );
      }
    }
    if ( !distinct )
    {
      continue;
    }
    ++all;
    if ( detail::reduces_to_complete( few_zero_function( zero_matrix::from_columns( cols, k, { n } ) ) ) )
    {
      ++good;
    }
  }
  if ( all == 0 )
  {
    throw error( error_kind::precondition_violated, "no matrix with distinct rows exists" );
  }
  return rational( good, all );
}

struct t2sweep_row
{
  std::size_t function_id = 0;
  std::size_t n = 0, k = 0, m = 0;
  rational epsilon;
  std::size_t exact_rank = 0;
  rational bound;
  rational margin; /* exact_rank - bound */
  bool proved_optimal = false;
  few_zero_function function;
  dnf formula;
};

/*! \brief Samples functions of the class with weights >= m and compares their
  minimal rank with the rank bound.  Rows are ordered by trial index. */
inline std::vector<t2sweep_row> experiment_t2sweep( std::size_t n, std::size_t k, std::size_t m, std::size_t trials, uint64_t seed, solve_options const& options = {}, sample_options const& sampling = {} )
{
  auto const bound = theorem2_bound( n, k, m );
  std::vector<t2sweep_row> rows( trials );
  parallel_for( trials, [&]( std::size_t i ) {
    auto f = sample_phi( n, k, m, derive_seed( seed, i ), sampling );
    auto const res = minimal_dnf( f, objective::rank, options );
    auto& row = rows[i];
    row.function_id = i;
    row.n = n;
    row.k = k;
    row.m = m;
    row.epsilon = bound.epsilon;
    row.exact_rank = res.optimum;
    row.bound = bound.value;
    row.margin = rational( static_cast<long long>( res.optimum ) ) - bound.value;
    row.proved_optimal = res.proved_optimal;
    row.function = std::move( f );
    row.formula = res.formula;
  } );
  return rows;
}

} // namespace facecover
