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

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "oracles.hpp"

using namespace facecover;

namespace
{

few_zero_function fn( std::vector<std::string> const& rows ) { return few_zero_function::from_strings( rows ); }

uint64_t word( std::string_view s ) { return bit_vector::from_string( s ).to_word(); }

few_zero_function const complete3 = few_zero_function::from_strings( { "001", "010", "100" } );
few_zero_function const parity3 = few_zero_function::from_strings( { "000", "011", "101", "110" } );

dnf const complete3_dnf = dnf::from_signed( { { 1, 2 }, { 1, 3 }, { 2, 3 }, { -1, -2, -3 } } );
dnf const parity3_dnf = dnf::from_signed( { { 1, 2, 3 }, { 1, -2, -3 }, { -1, 2, -3 }, { -1, -2, 3 } } );

/* Stirling numbers of the second kind by the recurrence */
uint64_t stirling2( std::size_t k, std::size_t t )
{
  if ( k == 0u && t == 0u )
  {
    return 1u;
  }
  if ( k == 0u || t == 0u )
  {
    return 0u;
  }
  return t * stirling2( k - 1u, t ) + stirling2( k - 1u, t - 1u );
}

/* random adjacency-free function, drawn by rejection */
few_zero_function random_adjacency_free( std::size_t n, std::size_t k, std::mt19937_64& rng )
{
  while ( true )
  {
    auto f = oracle::random_function( n, k, rng() );
    if ( !classify_matrix( f ).has_adjacent_zeros )
    {
      return f;
    }
  }
}

} // namespace

TEST_CASE( "near-zero sets of small functions", "[analysis][near-zero]" )
{
  SECTION( "complete function of three zeros" )
  {
    auto const r = near_zero_sets( complete3 );
    CHECK( r.theta1_points == std::vector<uint64_t>{ 0u } );
    std::vector<uint64_t> theta0{ word( "011" ), word( "101" ), word( "110" ) };
    std::sort( theta0.begin(), theta0.end() );
    CHECK( r.theta0_points == theta0 );
    CHECK( r.theta1_incidences.size() == 3u );
    CHECK( r.theta0_incidences.size() == 6u );
  }
  SECTION( "single zero at the origin" )
  {
    auto const f = few_zero_function( zero_matrix( { bit_vector( 5 ) } ) );
    auto const r = near_zero_sets( f );
    CHECK( r.theta1_points.empty() );
    REQUIRE( r.theta0_points.size() == 5u );
    for ( auto p : r.theta0_points )
    {
      CHECK( std::popcount( p ) == 1 );
    }
  }
  SECTION( "parity" )
  {
    auto const r = near_zero_sets( parity3 );
    CHECK( r.theta0_incidences.size() + r.theta1_incidences.size() == 12u );
    std::vector<uint64_t> odd{ word( "001" ), word( "010" ), word( "100" ), word( "111" ) };
    std::sort( odd.begin(), odd.end() );
    CHECK( r.theta_points == odd );
  }
}

TEST_CASE( "near-zero invariants", "[analysis][near-zero][property]" )
{
  std::mt19937_64 rng( 2 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    auto const n = 2 + rng() % 7;
    auto const k = 1 + rng() % std::min<uint64_t>( 6, ( uint64_t( 1 ) << n ) - 1 );
    auto const f = oracle::random_function( n, k, rng() );
    auto const r = near_zero_sets( f );
    for ( auto const* incs : { &r.theta0_incidences, &r.theta1_incidences } )
    {
      for ( auto const& inc : *incs )
      {
        REQUIRE( std::popcount( inc.point ^ f.matrix().row_word( inc.row ) ) == 1 );
        REQUIRE( f.evaluate( inc.point ) );
        REQUIRE( inc.on_one == f.matrix().row( inc.row ).get( inc.var ) );
      }
    }
    REQUIRE( r.theta0_incidences.size() >= r.theta0_points.size() );
    REQUIRE( r.theta1_incidences.size() >= r.theta1_points.size() );

    if ( !classify_matrix( f ).has_adjacent_zeros )
    {
      std::size_t ones = 0;
      for ( std::size_t i = 0; i < k; ++i )
      {
        ones += f.matrix().row( i ).count();
      }
      REQUIRE( r.theta1_incidences.size() == ones );
      REQUIRE( r.theta0_incidences.size() == n * k - ones );
    }
  }
}

TEST_CASE( "per-zero incidence of implicants", "[analysis][near-zero]" )
{
  CHECK( dyakonov_check( complete3, complete3_dnf ).max_incidence == 1u );
  CHECK( dyakonov_check( parity3, parity3_dnf ).max_incidence == 1u );
  CHECK( dyakonov_check( complete3, dnf::from_signed( { { 1, 2, 3 } } ) ).max_incidence <= 1u );
  CHECK( dyakonov_check( complete3, complete3_dnf ).holds() );

  /* a non-implicant can see two neighbours of one zero */
  auto const wide = dyakonov_check( complete3, dnf::from_signed( { { -1 } } ) );
  CHECK( wide.max_incidence == 2u );
  CHECK_FALSE( wide.holds() );
}

TEST_CASE( "per-zero incidence of every prime implicant is at most one", "[analysis][near-zero][oracle]" )
{
  for ( std::size_t n = 1; n <= 4; ++n )
  {
    oracle::for_each_matrix( n, 3, [&]( few_zero_function const& f ) {
      dnf const all( enumerate_prime_implicants( f ) );
      auto const r = dyakonov_check( f, all );
      REQUIRE( r.holds() );
      REQUIRE( r.max_incidence <= 1u );
    } );
  }
  std::mt19937_64 rng( 4 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto const n = 3 + rng() % 6;
    auto const f = oracle::random_function( n, 1 + rng() % 8, rng() );
    auto const primes = enumerate_prime_implicants( f );
    std::size_t worst = 0;
    for ( auto const& c : primes )
    {
      worst = std::max( worst, oracle::max_near_zero_incidence( f, c ) );
    }
    auto const r = dyakonov_check( f, dnf( primes ) );
    REQUIRE( r.max_incidence == worst );
    REQUIRE( r.holds() );
  }
}

TEST_CASE( "conjunction classes by shape", "[analysis][classification]" )
{
  CHECK( classify_shape( conjunction::from_signed( { 1, -2 } ), {} ) == conjunction_class::k6 );
  CHECK( classify_shape( conjunction::from_signed( { 1, 2 } ), {} ) == conjunction_class::k5 );
  CHECK( classify_shape( conjunction::from_signed( { -1, -2, -3 } ), { neg( 0 ) } ) == conjunction_class::k2 );
  CHECK( classify_shape( conjunction::from_signed( { 1, -2, -3 } ), { neg( 1 ) } ) == conjunction_class::k3 );
  CHECK( classify_shape( conjunction::from_signed( { 1, 2, -3 } ), { neg( 2 ) } ) == conjunction_class::k4 );
  CHECK( classify_shape( conjunction::from_signed( { 1, -2, -3 } ), { pos( 0 ) } ) == conjunction_class::k1 );
  CHECK( classify_shape( conjunction::from_signed( { 1, -2, -3 } ), {} ) == conjunction_class::k1 );
  CHECK( classify_shape( conjunction::from_signed( { 1, 2, 3 } ), {} ) == conjunction_class::unclassified );
  CHECK( classify_shape( conjunction::from_signed( { -1, -2 } ), {} ) == conjunction_class::unclassified );
  CHECK( to_string( conjunction_class::k4 ) == "K4" );
  CHECK( to_string( conjunction_class::unclassified ) == "UNCLASSIFIED" );
}

TEST_CASE( "classification of small functions", "[analysis][classification]" )
{
  SECTION( "complete function of three zeros" )
  {
    auto const r = classify_conjunctions( complete3, complete3_dnf );
    CHECK( r.precondition_holds );
    CHECK( r.min_column_weight == 1u );
    CHECK( r.mu == std::array<std::size_t, 6>{ 0, 1, 0, 0, 3, 0 } );
    CHECK( r.unclassified_count == 0u );
    auto const& all_neg = *std::find_if( r.terms.begin(), r.terms.end(), []( auto const& t ) { return t.term.rank() == 3u; } );
    CHECK( all_neg.own_literals.size() == 3u );

    auto const ineq = check_inequalities( complete3, complete3_dnf, r );
    CHECK( ineq.m == 1u );
    CHECK( ineq.epsilon == rational( 1, 3 ) );
    CHECK( ineq.checks[0].result == verdict::fails );
    CHECK( ineq.checks[1].result == verdict::holds );
    CHECK( ineq.checks[2].result == verdict::holds );
    CHECK( ineq.checks[3].result == verdict::fails );
  }
  SECTION( "parity" )
  {
    auto const r = classify_conjunctions( parity3, parity3_dnf );
    CHECK( r.precondition_holds );
    CHECK( r.mu[0] == 3u );
    CHECK( r.unclassified_count == 1u );
    CHECK( r.unclassified_fraction() == 0.25 );
    auto const ineq = check_inequalities( parity3, parity3_dnf, r );
    for ( auto const& c : ineq.checks )
    {
      CHECK( c.result == verdict::not_applicable );
    }
  }
  SECTION( "adjacent zeros" )
  {
    auto const f = fn( { "000", "001", "110" } );
    auto const d = minimal_dnf( f, objective::rank ).formula;
    try
    {
      classify_conjunctions( f, d );
      FAIL( "expected an error" );
    }
    catch ( error const& e )
    {
      CHECK( e.kind() == error_kind::precondition_violated );
    }
    auto const r = classify_conjunctions( f, d, classification_mode::report );
    CHECK_FALSE( r.precondition_holds );
    CHECK( r.terms.size() == d.length() );
  }
}

TEST_CASE( "classification counters add up", "[analysis][classification][property]" )
{
  std::mt19937_64 rng( 6 );
  for ( int trial = 0; trial < 150; ++trial )
  {
    auto const n = 3 + rng() % 5;
    auto const f = oracle::random_function( n, 2 + rng() % 5, rng() );
    auto const d = minimal_dnf( f, objective::rank ).formula;
    auto const r = classify_conjunctions( f, d, classification_mode::report );
    std::size_t total = r.unclassified_count;
    for ( auto m : r.mu )
    {
      total += m;
    }
    REQUIRE( total == d.length() );
    for ( auto const& t : r.terms )
    {
      for ( auto const& l : t.term.literals() )
      {
        bool const own = std::find( t.own_literals.begin(), t.own_literals.end(), l ) != t.own_literals.end();
        REQUIRE( own == ( d.multiplicity( l ) == 1u ) );
      }
      REQUIRE( t.cls == classify_shape( t.term, t.own_literals ) );
    }
  }
}

TEST_CASE( "counting inequalities on synthetic class counts", "[analysis][classification]" )
{
  /* (4) for mu_5 = 4 and n = 3: 2 mu_5 = 8 > 3 */
  CHECK( counting_inequalities_hold( 3, 0, { 0, 0, 0, 0, 4, 0 } ).second );
  /* all counts zero: both strict inequalities fail */
  auto const zero = counting_inequalities_hold( 5, rational( 1, 5 ), { 0, 0, 0, 0, 0, 0 } );
  CHECK_FALSE( zero.first );
  CHECK_FALSE( zero.second );
  /* with eps = 0 the inequalities are strict: mu_1 = mu_2 = n sits on the boundary, n + 1 clears it */
  auto const edge = counting_inequalities_hold( 7, 0, { 7, 7, 0, 0, 0, 0 } );
  CHECK_FALSE( edge.first );
  CHECK_FALSE( edge.second );
  auto const above = counting_inequalities_hold( 7, 0, { 8, 8, 0, 0, 0, 0 } );
  CHECK( above.first );
  CHECK( above.second );
}

TEST_CASE( "rank bound for the class of adjacency-free functions", "[analysis][bounds]" )
{
  auto const r = theorem2_bound( 3, 4, 2 );
  CHECK( r.epsilon == 0 );
  CHECK( r.value == 10 );
  CHECK( r.regime == theorem2_regime::eps_le_quarter );
  CHECK( r.delta == 0 );

  /* k = 8, m = 3: eps = 1/4 */
  auto const seam = theorem2_bound( 12, 8, 3 );
  CHECK( seam.epsilon == rational( 1, 4 ) );
  CHECK( seam.value == 36 );

  /* k = 14, m = 5: eps = 2/7 lies strictly between 1/4 and 1/3 */
  auto const high = theorem2_bound( 10, 14, 5 );
  CHECK( high.regime == theorem2_regime::quarter_lt_eps_lt_third );
  CHECK( high.value == rank_bound_high_eps( 10, rational( 2, 7 ) ) );

  CHECK_THROWS_AS( theorem2_bound( 3, 6, 2 ), error ); /* m below floor(k/3) + 1 */
  CHECK_THROWS_AS( theorem2_bound( 3, 4, 3 ), error ); /* m above k/2 */
}

TEST_CASE( "both bound formulas meet at 3n for eps = 1/4", "[analysis][bounds]" )
{
  for ( long long n = 1; n <= 100; ++n )
  {
    REQUIRE( rank_bound_low_eps( n, rational( 1, 4 ) ) == 3 * n );
    REQUIRE( rank_bound_high_eps( n, rational( 1, 4 ) ) == 3 * n );
  }
}

TEST_CASE( "bound for almost all functions", "[analysis][bounds]" )
{
  /* alpha close to 0 approaches 10m/3 - 5m/3 */
  auto const small = theorem3_bound( 1000, 320, 1e-9 );
  CHECK( small.first_applicable );
  CHECK( small.first_value == Catch::Approx( 5.0 * 1000 / 3.0 ).epsilon( 1e-6 ) );

  /* m close to e^{k/32} for k = 320 */
  auto const r = theorem3_bound( 22026, 320, 0.5 );
  CHECK( r.first_applicable );
  CHECK( r.log_m <= 10.0 );
  auto const lambda = 0.5 * std::sqrt( 2.0 * std::log( 22026.0 ) / 320.0 );
  CHECK( r.lambda == Catch::Approx( lambda ) );
  CHECK( r.first_value == Catch::Approx( 10.0 * 22026 / 3 - 5.0 * 22026 * ( 1 - lambda ) / ( 3 + 3 * lambda ) ) );

  CHECK_THROWS_AS( theorem3_bound( 100, 320, 1.0 ), error );
  CHECK_THROWS_AS( theorem3_bound( 100, 320, 0.0 ), error );
  CHECK_THROWS_AS( theorem3_bound( 100000, 320, 0.5 ), error );
}

TEST_CASE( "binomial tail against the exponential bound", "[analysis][bounds]" )
{
  auto const r = chernoff_tail_check( 4, 1.0 );
  CHECK( r.exact_sum == 5 );
  CHECK( static_cast<double>( r.bound ) == Catch::Approx( 16.0 * std::exp( -0.5 ) ) );
  CHECK( r.holds );
  CHECK( chernoff_tail_check( 10, 0.0 ).holds );
  CHECK( chernoff_tail_check( 30, 5.0 ).holds );
  CHECK_THROWS_AS( chernoff_tail_check( 4, 3.0 ), error );

  for ( std::size_t k = 1; k <= 30; ++k )
  {
    for ( std::size_t lambda = 0; 2 * lambda <= k; ++lambda )
    {
      auto const c = chernoff_tail_check( k, static_cast<double>( lambda ) );
      big_int expected = 0;
      for ( std::size_t t = 0; 2 * t + 2 * lambda <= k; ++t )
      {
        expected += binomial( k, t );
      }
      REQUIRE( c.exact_sum == expected );
      REQUIRE( c.holds );
    }
  }
}

TEST_CASE( "cuts are set partitions", "[analysis][cuts]" )
{
  CHECK( enumerate_cuts( complete3.matrix(), 1 ).size() == 1u );
  CHECK( enumerate_cuts( complete3.matrix(), 2 ).size() == 3u );
  CHECK( enumerate_cuts( complete3.matrix(), 3 ).size() == 1u );
  for ( std::size_t k = 1; k <= 8; ++k )
  {
    for ( std::size_t t = 1; t <= k; ++t )
    {
      std::size_t count = 0;
      for_each_cut( k, t, [&]( cut const& c ) {
        REQUIRE( c.size() == t );
        uint64_t seen = 0;
        for ( auto const& b : c )
        {
          REQUIRE_FALSE( b.empty() );
          auto const m = detail::block_mask( b );
          REQUIRE( ( seen & m ) == 0u );
          seen |= m;
        }
        REQUIRE( seen == low_mask( k ) );
        ++count;
        return true;
      } );
      REQUIRE( count == stirling2( k, t ) );
    }
  }
  CHECK_THROWS_AS( for_each_cut( 3, 4, []( cut const& ) { return true; } ), error );
  CHECK_THROWS_AS( for_each_cut( 11, 2, []( cut const& ) { return true; } ), error );
}

TEST_CASE( "literal multiplicity lemma on small functions", "[analysis][cuts]" )
{
  SECTION( "single zero" )
  {
    auto const f = few_zero_function( zero_matrix( { bit_vector( 3 ) } ) );
    auto const r = verify_cut_lemma( f, pos( 0 ), 1 );
    CHECK_FALSE( r.hypothesis_holds );
  }
  SECTION( "parity, x1, one part" )
  {
    auto const r = verify_cut_lemma( parity3, pos( 0 ), 1 );
    CHECK( r.in_phi );
    CHECK( r.hypothesis_holds );
    CHECK( r.conclusion_holds_on_all_checked_dnfs );
    CHECK( r.min_multiplicity == 2u );
    CHECK( r.dnfs_checked == 2u );
  }
  SECTION( "complete function, ~x1, one part" )
  {
    auto const r = verify_cut_lemma( complete3, neg( 0 ), 1 );
    CHECK_FALSE( r.hypothesis_holds );
    CHECK( r.min_multiplicity == 1u );
  }
  SECTION( "limits" )
  {
    CHECK_THROWS_AS( verify_cut_lemma( complete_function( 7 ), pos( 0 ), 1 ), error );
    CHECK_THROWS_AS( verify_cut_lemma( complete3, pos( 3 ), 1 ), error );
  }
}

TEST_CASE( "whenever the multiplicity hypothesis holds, optimal DNFs repeat the literal", "[analysis][cuts][property]" )
{
  std::mt19937_64 rng( 12 );
  std::size_t hypotheses = 0;
  for ( int trial = 0; trial < 40; ++trial )
  {
    auto const n = 3 + rng() % 3;
    auto const k = 2 + rng() % 3;
    auto const f = random_adjacency_free( n, k, rng );
    for ( std::size_t v = 0; v < n; ++v )
    {
      for ( bool positive : { true, false } )
      {
        for ( std::size_t t = 1; t <= std::min<std::size_t>( k, 2 ); ++t )
        {
          auto const r = verify_cut_lemma( f, { v, positive }, t );
          if ( r.hypothesis_holds )
          {
            ++hypotheses;
            REQUIRE( r.conclusion_holds_on_all_checked_dnfs );
          }
        }
      }
    }
  }
  CHECK( hypotheses > 0u );
}

TEST_CASE( "seeds", "[analysis][experiments]" )
{
  CHECK( derive_seed( 1, 2 ) == derive_seed( 1, 2 ) );
  CHECK( derive_seed( 1, 2 ) != derive_seed( 1, 3 ) );
  CHECK( derive_seed( 1, 2 ) != derive_seed( 2, 2 ) );
  CHECK( worker_count() >= 1u );
}

TEST_CASE( "sampling the class of adjacency-free reduced functions", "[analysis][experiments]" )
{
  for ( uint64_t seed = 0; seed < 30; ++seed )
  {
    auto const f = sample_phi( 5, 5, 2, seed );
    auto const c = classify_matrix( f );
    REQUIRE( c.in_phi( 2 ) );
    REQUIRE( c.ones_le_zeros_all_columns );
    REQUIRE( f.n() == 5u );
    REQUIRE( f.k() == 5u );
    REQUIRE( sample_phi( 5, 5, 2, seed ).matrix() == f.matrix() );
  }
  auto const p = sample_phi( 3, 4, 2, 7 );
  CHECK( classify_matrix( p ).in_phi( 2 ) );

  auto kind_of = []( auto&& call ) {
    try
    {
      call();
    }
    catch ( error const& e )
    {
      return e.kind();
    }
    return error_kind::io_error;
  };
  /* three is the largest number of weight-2 column classes for k = 4 */
  CHECK( kind_of( [] { sample_phi( 8, 4, 2, 7 ); } ) == error_kind::precondition_violated );
  CHECK( kind_of( [] { sample_phi( 3, 4, 3, 7 ); } ) == error_kind::precondition_violated );
  CHECK( kind_of( [] { sample_phi( 2, 5, 0, 7 ); } ) == error_kind::precondition_violated );
  sample_options few;
  few.max_attempts = 1;
  CHECK( kind_of( [&] {
           for ( uint64_t s = 0; s < 100; ++s )
           {
             sample_phi( 7, 6, 2, s, few );
           }
         } ) == error_kind::resource_limit );
}

TEST_CASE( "fraction of functions reducing to the complete function", "[analysis][experiments]" )
{
  /* k = 2: every non-constant column lies in the single class */
  CHECK( theorem1_exact_fraction( 4, 2 ) == 1 );
  CHECK( experiment_theorem1( 4, 2, 50, 1 ).fraction == 1.0 );

  /* k = 3, n = 4 against a direct count over all 3 x 4 matrices */
  big_int good = 0, all = 0;
  for ( uint64_t bits = 0; bits < ( uint64_t( 1 ) << 12 ); ++bits )
  {
    uint64_t const r0 = bits & 15u, r1 = ( bits >> 4 ) & 15u, r2 = ( bits >> 8 ) & 15u;
    if ( r0 == r1 || r0 == r2 || r1 == r2 )
    {
      continue;
    }
    bool constant = false;
    std::array<bool, 3> classes{};
    for ( std::size_t j = 0; j < 4; ++j )
    {
      unsigned c = ( ( r0 >> j ) & 1u ) | ( ( ( r1 >> j ) & 1u ) << 1 ) | ( ( ( r2 >> j ) & 1u ) << 2 );
      if ( c == 0u || c == 7u )
      {
        constant = true;
        break;
      }
      /* classes {1,6}, {2,5}, {4,3} */
      unsigned const single = std::popcount( c ) == 1 ? c : 7u ^ c;
      classes[single == 1u ? 0 : single == 2u ? 1 : 2] = true;
    }
    if ( constant )
    {
      continue;
    }
    ++all;
    good += ( classes[0] && classes[1] && classes[2] ) ? 1 : 0;
  }
  auto const exact = theorem1_exact_fraction( 4, 3 );
  CHECK( exact == rational( good, all ) );

  auto const mc = experiment_theorem1( 4, 3, 4000, 99 );
  auto const p = to_double( exact );
  CHECK( std::abs( mc.fraction - p ) < 5.0 * std::sqrt( p * ( 1 - p ) / 4000.0 ) );

  CHECK_THROWS_AS( experiment_theorem1( 4, 3, 0, 1 ), error );
}

TEST_CASE( "experiments do not depend on the number of threads", "[analysis][experiments]" )
{
  auto const many = experiment_theorem1( 64, 5, 300, 2024 );
  ::setenv( "FACECOVER_THREADS", "1", 1 );
  auto const one = experiment_theorem1( 64, 5, 300, 2024 );
  auto const sweep_one = experiment_t2sweep( 4, 5, 2, 6, 3 );
  ::unsetenv( "FACECOVER_THREADS" );
  auto const sweep_many = experiment_t2sweep( 4, 5, 2, 6, 3 );
  CHECK( one.complete_count == many.complete_count );
  REQUIRE( sweep_one.size() == sweep_many.size() );
  for ( std::size_t i = 0; i < sweep_one.size(); ++i )
  {
    CHECK( sweep_one[i].function.matrix() == sweep_many[i].function.matrix() );
    CHECK( sweep_one[i].exact_rank == sweep_many[i].exact_rank );
  }
}

TEST_CASE( "sampled functions exceed the rank bound", "[analysis][experiments]" )
{
  for ( auto const& row : experiment_t2sweep( 5, 5, 2, 10, 17 ) )
  {
    REQUIRE( row.proved_optimal );
    REQUIRE( row.margin > 0 );
    REQUIRE( rational( static_cast<long long>( row.exact_rank ) ) == row.bound + row.margin );
    REQUIRE( oracle::realizes( row.function, row.formula ) );
  }
}
