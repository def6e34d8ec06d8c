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

/*
  Acceptance suite: one PASS/FAIL line per criterion.

    acceptance [--criterion N ...] [--findings FILE] [--complete5-budget NODES]

  Exit status is 0 iff every selected criterion passes.
*/

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <facecover/facecover.hpp>
#include <facecover/report.hpp>

#include "oracles.hpp"

using namespace facecover;

namespace
{

struct verdict_line
{
  bool pass = false;
  std::string detail;
};

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

std::string fmt_seconds( double s )
{
  std::ostringstream os;
  os.precision( 3 );
  os << s << " s";
  return os.str();
}

/* ---------------------------------------------------------------- families */

std::vector<few_zero_function> const& exhaustive_family()
{
  static std::vector<few_zero_function> const family = [] {
    std::vector<few_zero_function> fs;
    for ( std::size_t n = 1; n <= 4; ++n )
    {
      oracle::for_each_matrix( n, 3, [&]( few_zero_function const& f ) { fs.push_back( f ); } );
    }
    return fs;
  }();
  return family;
}

/* 200 seeded functions with n <= 8 and k <= 5 */
std::vector<few_zero_function> const& random_family()
{
  static std::vector<few_zero_function> const family = [] {
    std::vector<few_zero_function> fs;
    std::mt19937_64 rng( 0x2c0ffee );
    for ( int i = 0; i < 200; ++i )
    {
      auto const n = 1 + rng() % 8;
      auto const k = 1 + rng() % std::min<uint64_t>( 5, ( uint64_t( 1 ) << n ) - 1 );
      fs.push_back( oracle::random_function( n, k, rng() ) );
    }
    return fs;
  }();
  return family;
}

struct sweep_group
{
  std::size_t n, k, m, trials;
};

/* samples of the adjacency-free classes with eps < 1/3 */
std::vector<sweep_group> const sweep_groups{
    { 3, 4, 2, 100 },
    { 4, 5, 2, 50 },
    { 5, 5, 2, 50 },
    { 6, 5, 2, 50 },
    { 7, 5, 2, 50 },
    { 4, 6, 3, 70 },
    { 5, 6, 3, 70 },
    { 6, 6, 3, 70 },
};

struct sweep_sample
{
  sweep_group group;
  t2sweep_row row;
};

std::vector<sweep_sample> const& sweep_family()
{
  static std::vector<sweep_sample> const family = [] {
    std::vector<sweep_sample> out;
    for ( std::size_t g = 0; g < sweep_groups.size(); ++g )
    {
      auto const& grp = sweep_groups[g];
      for ( auto& row : experiment_t2sweep( grp.n, grp.k, grp.m, grp.trials, derive_seed( 4004, g ) ) )
      {
        out.push_back( { grp, std::move( row ) } );
      }
    }
    return out;
  }();
  return family;
}

/* -------------------------------------------------------------- criteria */

verdict_line implicant_oracle()
{
  auto const start = clock_type::now();
  std::size_t mismatches = 0;
  for ( auto const& f : exhaustive_family() )
  {
    auto primes = enumerate_prime_implicants( f );
    std::sort( primes.begin(), primes.end() );
    mismatches += primes != oracle::prime_implicants( f ) ? 1u : 0u;
  }
  auto const t = seconds_since( start );
  return { mismatches == 0u && t < 60.0,
           std::to_string( exhaustive_family().size() ) + " matrices, " + std::to_string( mismatches ) + " mismatches, " + fmt_seconds( t ) };
}

verdict_line solver_oracle()
{
  auto const start = clock_type::now();
  std::size_t mismatches = 0, checked = 0;
  auto check = [&]( few_zero_function const& f ) {
    for ( auto goal : { objective::rank, objective::length } )
    {
      auto const r = minimal_dnf( f, goal );
      bool const ok = r.proved_optimal && r.optimum == oracle::optimum( f, goal ) && measure( r.formula, goal ) == r.optimum && oracle::realizes( f, r.formula );
      mismatches += ok ? 0u : 1u;
      ++checked;
    }
  };
  for ( auto const& f : exhaustive_family() )
  {
    check( f );
  }
  for ( auto const& f : random_family() )
  {
    check( f );
  }
  auto const t = seconds_since( start );
  return { mismatches == 0u && t < 300.0,
           std::to_string( checked ) + " optima (rank and length), " + std::to_string( mismatches ) + " mismatches, " + fmt_seconds( t ) };
}

verdict_line fixed_values()
{
  std::vector<std::string> wrong;
  for ( std::size_t n = 3; n <= 10; ++n )
  {
    auto const r = minimal_dnf( few_zero_function( zero_matrix( { bit_vector( n ) } ) ), objective::rank );
    if ( r.optimum != n || !r.proved_optimal )
    {
      wrong.push_back( "origin n=" + std::to_string( n ) + " gave " + std::to_string( r.optimum ) );
    }
  }
  auto expect = [&]( std::string const& name, few_zero_function const& f, objective goal, std::size_t value ) {
    auto const r = minimal_dnf( f, goal );
    if ( r.optimum != value || !r.proved_optimal )
    {
      wrong.push_back( name + " " + std::string( to_string( goal ) ) + " gave " + std::to_string( r.optimum ) );
    }
  };
  auto const parity = few_zero_function::from_strings( { "000", "011", "101", "110" } );
  expect( "parity", parity, objective::rank, 12 );
  expect( "parity", parity, objective::length, 4 );
  expect( "complete(3)", complete_function( 3 ), objective::rank, 9 );
  expect( "complete(3)", complete_function( 3 ), objective::length, 4 );
  std::string detail = "single zero n=3..10, parity rank/length, complete(3) rank/length";
  for ( auto const& w : wrong )
  {
    detail += "; " + w;
  }
  return { wrong.empty(), detail };
}

verdict_line rank_bound_dominance()
{
  auto const start = clock_type::now();
  std::size_t violations = 0, unproved = 0;
  for ( auto const& s : sweep_family() )
  {
    auto const& r = s.row;
    unproved += r.proved_optimal ? 0u : 1u;
    bool const in_class = classify_matrix( r.function ).in_phi( s.group.m ) && r.epsilon < rational( 1, 3 );
    if ( !r.proved_optimal || !in_class || !( rational( static_cast<long long>( r.exact_rank ) ) > r.bound ) )
    {
      ++violations;
    }
  }
  /* the smallest instance: the parity function on three variables */
  auto const parity = few_zero_function::from_strings( { "000", "011", "101", "110" } );
  auto const rank = minimal_dnf( parity, objective::rank ).optimum;
  auto const bound = theorem2_bound( 3, 4, 2 ).value;
  bool const instance = rank == 12u && bound == 10 && rational( static_cast<long long>( rank ) ) > bound;
  auto const t = seconds_since( start );
  return { violations == 0u && instance && sweep_family().size() >= 500u && t < 600.0,
           std::to_string( sweep_family().size() ) + " samples (k=4,5,6), " + std::to_string( violations ) + " violations, " + std::to_string( unproved ) +
               " unproved; n=3,k=4,m=2: " + std::to_string( rank ) + " > " + to_string( bound ) + ", " + fmt_seconds( t ) };
}

verdict_line regime_seam()
{
  std::size_t wrong = 0;
  for ( long long n = 1; n <= 100; ++n )
  {
    wrong += rank_bound_low_eps( n, rational( 1, 4 ) ) == 3 * n ? 0u : 1u;
    wrong += rank_bound_high_eps( n, rational( 1, 4 ) ) == 3 * n ? 0u : 1u;
  }
  return { wrong == 0u, "both formulas equal 3n at eps=1/4 for n=1..100, " + std::to_string( wrong ) + " mismatches" };
}

verdict_line near_zero_audit()
{
  std::size_t functions = 0, implicants = 0, violations = 0;
  auto check = [&]( few_zero_function const& f ) {
    dnf const all( enumerate_prime_implicants( f ) );
    auto const r = dyakonov_check( f, all );
    ++functions;
    implicants += all.length();
    violations += r.violations.size();
  };
  for ( auto const& f : exhaustive_family() )
  {
    check( f );
  }
  for ( auto const& f : random_family() )
  {
    check( f );
  }
  for ( std::size_t n = 3; n <= 10; ++n )
  {
    check( few_zero_function( zero_matrix( { bit_vector( n ) } ) ) );
  }
  check( few_zero_function::from_strings( { "000", "011", "101", "110" } ) );
  check( complete_function( 3 ) );
  for ( auto const& s : sweep_family() )
  {
    check( s.row.function );
  }
  return { violations == 0u,
           std::to_string( functions ) + " functions, " + std::to_string( implicants ) + " prime implicants, " + std::to_string( violations ) + " violations" };
}

verdict_line reduction_round_trip()
{
  std::mt19937_64 rng( 7007 );
  std::size_t samples = 0, violations = 0, with_groups = 0;
  while ( samples < 100u )
  {
    auto const n = 2 + rng() % 11;
    auto const k = 2 + rng() % 3;
    auto const raw = oracle::random_function( n, k, rng() );
    if ( classify_matrix( raw ).has_constant_column )
    {
      continue;
    }
    auto const f = to_proper( raw ).function;
    ++samples;
    auto const red = extract_reduced( f );
    auto const opt = minimal_dnf( red.function, objective::rank );
    auto const composed = compose_reduction( opt.formula, red.grouping );
    with_groups += red.grouping.grouped_columns() > 0u ? 1u : 0u;
    bool const ok = classify_matrix( f ).is_proper && opt.proved_optimal && oracle::realizes( f, composed ) &&
                    composed.rank() <= opt.optimum + 2u * red.grouping.grouped_columns();
    violations += ok ? 0u : 1u;
  }
  return { violations == 0u,
           std::to_string( samples ) + " proper functions (" + std::to_string( with_groups ) + " with repeated columns), " + std::to_string( violations ) + " violations" };
}

verdict_line binomial_tail()
{
  auto const start = clock_type::now();
  std::size_t checked = 0, failures = 0;
  for ( std::size_t k = 1; k <= 30; ++k )
  {
    for ( std::size_t lambda = 0; 2 * lambda <= k; ++lambda )
    {
      ++checked;
      failures += chernoff_tail_check( k, static_cast<double>( lambda ) ).holds ? 0u : 1u;
    }
  }
  auto const t = seconds_since( start );
  return { failures == 0u && t < 10.0, std::to_string( checked ) + " (k, lambda) pairs, " + std::to_string( failures ) + " failures, " + fmt_seconds( t ) };
}

verdict_line hk_column_count()
{
  std::string detail;
  bool ok = true;
  for ( std::size_t k = 8; k <= 16; ++k )
  {
    auto const h = hk_function( k );
    /* columns >= 2^{k-1} (1 - 2/k)  <=>  k * columns >= 2^{k-1} (k - 2) */
    auto const lhs = static_cast<uint64_t>( k ) * h.columns;
    auto const rhs = ( uint64_t( 1 ) << ( k - 1 ) ) * ( k - 2 );
    ok = ok && lhs >= rhs && h.function.n() == h.columns;
    detail += ( detail.empty() ? "" : ", " ) + std::string( "k=" ) + std::to_string( k ) + ":" + std::to_string( h.columns );
  }
  return { ok, "columns " + detail };
}

verdict_line complete_fraction()
{
  auto const start = clock_type::now();
  auto const r = experiment_theorem1( 1024, 5, 1000, 1024 );
  auto const t = seconds_since( start );
  std::ostringstream os;
  os << "n=1024 k=5 trials=1000 seed=1024: fraction " << r.fraction << ", " << fmt_seconds( t );
  return { r.fraction >= 0.99 && t < 120.0, os.str() };
}

verdict_line classification_audit( std::string const& findings_path )
{
  json findings = make_report( "acceptance_findings" );
  json records = json::array();
  std::size_t functions = 0, fully_classified = 0, false_verdicts = 0, with_unclassified = 0, false_when_classified = 0;
  for ( std::size_t i = 0; i < sweep_family().size(); ++i )
  {
    auto const& s = sweep_family()[i];
    auto const& f = s.row.function;
    auto const& d = s.row.formula;
    auto const c = classify_conjunctions( f, d, classification_mode::report );
    auto const ineq = check_inequalities( f, d, c );
    ++functions;
    bool any_false = false;
    for ( auto const& chk : ineq.checks )
    {
      any_false = any_false || chk.result == verdict::fails;
    }
    false_verdicts += any_false ? 1u : 0u;
    with_unclassified += c.unclassified_count > 0u ? 1u : 0u;
    if ( c.unclassified_count == 0u )
    {
      ++fully_classified;
      false_when_classified += any_false ? 1u : 0u;
    }
    if ( any_false || c.unclassified_count > 0u )
    {
      records.push_back( { { "sample", i },
                           { "n", f.n() },
                           { "k", f.k() },
                           { "m", s.group.m },
                           { "matrix", format_matrix( f ) },
                           { "dnf", to_json( d ) },
                           { "rank", d.rank() },
                           { "mu", c.mu },
                           { "unclassified_count", c.unclassified_count },
                           { "unclassified_fraction", c.unclassified_fraction() },
                           { "inequalities", to_json( ineq ) } } );
    }
  }
  findings["functions"] = functions;
  findings["fully_classified"] = fully_classified;
  findings["with_unclassified_terms"] = with_unclassified;
  findings["with_false_verdict"] = false_verdicts;
  findings["false_verdict_when_fully_classified"] = false_when_classified;
  findings["records"] = records;

  bool written = true;
  if ( !findings_path.empty() )
  {
    std::ofstream out( findings_path );
    written = static_cast<bool>( out << findings.dump( 2 ) << '\n' );
  }
  return { written && functions == sweep_family().size(),
           std::to_string( functions ) + " minimal DNFs audited: " + std::to_string( with_unclassified ) + " with unclassified terms, " + std::to_string( false_verdicts ) +
               " with a false verdict (" + std::to_string( false_when_classified ) + " of them fully classified); " + std::to_string( records.size() ) + " findings" +
               ( findings_path.empty() ? std::string( " (no findings file requested)" ) : " written to " + findings_path ) };
}

verdict_line complete_function_rank( uint64_t budget_k5 )
{
  bool ok = true;
  std::string detail;
  for ( std::size_t k = 3; k <= 5; ++k )
  {
    auto const start = clock_type::now();
    auto const f = complete_function( k );
    solve_options so;
    so.node_budget = k == 5u ? budget_k5 : 0u;
    auto const r = minimal_dnf( f, objective::rank, so );
    auto const limit = std::size_t( 3 ) << ( k - 1 );
    std::size_t value = r.optimum;
    std::string how = "proved optimum";
    if ( !r.proved_optimal )
    {
      value = greedy_dnf( f, objective::rank ).rank();
      how = "greedy (search stopped at " + std::to_string( r.optimum ) + " after " + std::to_string( r.nodes_explored ) + " nodes)";
    }
    auto const t = seconds_since( start );
    ok = ok && value <= limit && t < 600.0;
    detail += ( detail.empty() ? "" : "; " ) + std::string( "k=" ) + std::to_string( k ) + ": " + std::to_string( value ) + ( value <= limit ? " <= " : " > " ) +
              std::to_string( limit ) + " by " + how + ", " + fmt_seconds( t );
  }
  return { ok, detail };
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "facecover acceptance suite" };
  std::vector<int> selected;
  std::string findings_path;
  uint64_t budget_k5 = 2'000'000;
  app.add_option( "--criterion", selected, "criteria to run (default: all)" )->check( CLI::Range( 1, 12 ) );
  app.add_option( "--findings", findings_path, "where to write the classification findings (JSON)" );
  app.add_option( "--complete5-budget", budget_k5, "node budget for the complete function of five zeros" );
  CLI11_PARSE( app, argc, argv );

  std::map<int, std::pair<std::string, std::function<verdict_line()>>> const criteria{
      { 1, { "prime implicants match brute force", implicant_oracle } },
      { 2, { "optima match brute force", solver_oracle } },
      { 3, { "fixed exact values", fixed_values } },
      { 4, { "minimal rank exceeds the class bound", rank_bound_dominance } },
      { 5, { "bound formulas meet at eps=1/4", regime_seam } },
      { 6, { "per-zero near-zero incidence <= 1", near_zero_audit } },
      { 7, { "reduction round trip", reduction_round_trip } },
      { 8, { "binomial tail bound", binomial_tail } },
      { 9, { "H_k column count", hk_column_count } },
      { 10, { "fraction reducing to the complete function", complete_fraction } },
      { 11, { "classification audit", [&] { return classification_audit( findings_path ); } } },
      { 12, { "complete-function rank <= 3*2^(k-1)", [&] { return complete_function_rank( budget_k5 ); } } },
  };
  if ( selected.empty() )
  {
    for ( auto const& [id, _] : criteria )
    {
      selected.push_back( id );
    }
  }

  int failed = 0;
  for ( auto id : selected )
  {
    auto const& [name, fn] = criteria.at( id );
    verdict_line v;
    try
    {
      v = fn();
    }
    catch ( std::exception const& e )
    {
      v = { false, std::string( "error: " ) + e.what() };
    }
    failed += v.pass ? 0 : 1;
    std::cout << ( v.pass ? "PASS" : "FAIL" ) << "  criterion " << id << "  " << name << ": " << v.detail << std::endl;
  }
  std::cout << ( failed == 0 ? "all selected criteria passed" : std::to_string( failed ) + " criterion(s) failed" ) << std::endl;
  return failed == 0 ? 0 : 1;
}
