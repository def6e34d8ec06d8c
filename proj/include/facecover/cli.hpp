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
  \file cli.hpp
  \brief Command-line front end of the facecover tool

  `run` parses the arguments, dispatches to the library and writes reports
  to the given streams, so the whole command line is testable in-process.
  Errors are written to `err` as a JSON object and mapped to exit codes:

    0  success
    1  usage error or invalid argument
    2  precondition violated (wrong class of function, bad parameters)
    3  budget or resource limit exhausted
    4  input/output error
    5  malformed or duplicate input rows
    6  unexpected internal error
*/

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analysis/bounds.hpp"
#include "analysis/classification.hpp"
#include "analysis/cuts.hpp"
#include "analysis/experiments.hpp"
#include "analysis/near_zero.hpp"
#include "canon.hpp"
#include "error.hpp"
#include "implicants.hpp"
#include "report.hpp"
#include "solver.hpp"
#include "text_format.hpp"

namespace facecover::cli
{

enum exit_code : int
{
  ok = 0,
  usage = 1,
  precondition = 2,
  resource = 3,
  io = 4,
  malformed_input = 5,
  internal = 6
};

inline int exit_code_for( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::invalid_argument:
  case error_kind::index_out_of_range:
  case error_kind::length_mismatch:
    return usage;
  case error_kind::precondition_violated:
  case error_kind::constant_column:
  case error_kind::not_proper:
  case error_kind::arity_mismatch:
  case error_kind::decomposition_hypothesis_fails:
    return precondition;
  case error_kind::resource_limit:
    return resource;
  case error_kind::io_error:
    return io;
  case error_kind::malformed_row:
  case error_kind::duplicate_row:
    return malformed_input;
  }
  return internal;
}

namespace detail
{

/* Largest matrix width accepted by commands that do not enumerate points. */
inline constexpr std::size_t wide_matrix_limit = std::size_t( 1 ) << 20;

struct options
{
  std::string in = "-";
  std::string out;
  std::string dnf_path;
  std::string objective = "rank";
  std::string format;
  std::string mode = "report";
  std::size_t k = 0, n = 0, m = 0, trials = 0, t = 1;
  double alpha = 0.0;
  double lambda = 0.0;
  std::size_t lambda_weight = 0;
  int literal = 0;
  uint64_t seed = 0;
  uint64_t budget = 0;
  bool all = false;
  bool json_output = false;
  bool greedy = false;
};

inline void write_error( std::ostream& err, std::string_view kind, std::string const& message, int code )
{
  json j = make_report( "error" );
  j["error"] = { { "kind", kind }, { "message", message }, { "exit_code", code } };
  err << j.dump() << '\n';
}

class io_context
{
public:
  io_context( std::istream& in, std::ostream& out ) : in_( in ), out_( out ) {}

  few_zero_function read_matrix( std::string const& path, matrix_limits limits = {} ) const
  {
    if ( path.empty() || path == "-" )
    {
      return parse_matrix( in_, limits );
    }
    return parse_matrix_file( path, limits );
  }

  json read_json( std::string const& path ) const
  {
    std::ifstream f( path );
    if ( !f )
    {
      throw error( error_kind::io_error, "cannot open " + path );
    }
    try
    {
      return json::parse( f );
    }
    catch ( json::exception const& e )
    {
      throw error( error_kind::malformed_row, path + ": " + e.what() );
    }
  }

  /* writes to `path`, or to the output stream when no path is given */
  void emit( std::string const& path, std::string const& text ) const
  {
    if ( path.empty() || path == "-" )
    {
      out_ << text;
      return;
    }
    std::ofstream f( path );
    if ( !f || !( f << text ) )
    {
      throw error( error_kind::io_error, "cannot write " + path );
    }
  }

private:
  std::istream& in_;
  std::ostream& out_;
};

inline objective parse_objective( std::string const& s )
{
  if ( s == "rank" )
  {
    return objective::rank;
  }
  if ( s == "length" )
  {
    return objective::length;
  }
  throw error( error_kind::invalid_argument, "objective must be rank or length" );
}

inline json provenance( options const& o, bool seeded )
{
  json p;
  if ( seeded )
  {
    p["seed"] = o.seed;
  }
  p["budget"] = o.budget;
  return p;
}

inline std::string matrix_text( few_zero_function const& f, std::vector<std::string> const& comments = {} )
{
  std::string s;
  for ( auto const& c : comments )
  {
    s += "# " + c + '\n';
  }
  return s + format_matrix( f );
}

} // namespace detail

/*! \brief Runs the tool on `args` (without the program name). */
inline int run( std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err )
{
  using namespace detail;
  options o;
  CLI::App app{ "facecover: DNF minimization and lower-bound auditing for few-zero Boolean functions", "facecover" };
  app.require_subcommand( 1 );
  app.set_version_flag( "--version", std::string( version_string ) );

  auto add_in = [&]( CLI::App* c ) { c->add_option( "--in", o.in, "zero-matrix file ('-' or absent: stdin)" ); };
  auto add_out = [&]( CLI::App* c ) { c->add_option( "--out", o.out, "output file (absent: stdout)" ); };
  auto add_budget = [&]( CLI::App* c ) { c->add_option( "--budget", o.budget, "branch-and-bound node budget (0: unlimited)" ); };

  auto* gen = app.add_subcommand( "gen", "generate a zero matrix" )->require_subcommand( 1 );
  auto* gen_complete = gen->add_subcommand( "complete", "complete function of k zeros" );
  auto* gen_hk = gen->add_subcommand( "hk", "adjacency-free function H_k" );
  for ( auto* c : { gen_complete, gen_hk } )
  {
    c->add_option( "--k", o.k, "number of zeros" )->required();
    add_out( c );
  }

  auto* canon = app.add_subcommand( "canon", "proper form with transform and column grouping" );
  add_in( canon );
  add_out( canon );

  auto* implicants = app.add_subcommand( "implicants", "prime implicants" );
  add_in( implicants );
  add_out( implicants );
  implicants->add_flag( "--json", o.json_output, "JSON output" );
  implicants->add_option( "--format", o.format, "json or text" )->check( CLI::IsMember( { "json", "text" } ) );

  auto* minimize = app.add_subcommand( "minimize", "minimal-rank or shortest DNF" );
  add_in( minimize );
  add_out( minimize );
  add_budget( minimize );
  minimize->add_option( "--objective", o.objective, "rank or length" )->check( CLI::IsMember( { "rank", "length" } ) );
  minimize->add_flag( "--all", o.all, "enumerate every optimum" );
  minimize->add_flag( "--greedy", o.greedy, "greedy upper bound only" );

  auto* analyze = app.add_subcommand( "analyze", "classification, inequalities and near-zero report" );
  add_in( analyze );
  add_out( analyze );
  add_budget( analyze );
  analyze->add_option( "--dnf", o.dnf_path, "DNF JSON (absent: a minimal-rank DNF is computed)" );
  analyze->add_option( "--mode", o.mode, "strict or report" )->check( CLI::IsMember( { "strict", "report" } ) );

  auto* bound = app.add_subcommand( "bound", "evaluate rank lower bounds" )->require_subcommand( 1 );
  auto* bound_t2 = bound->add_subcommand( "t2", "bound for a fixed class" );
  bound_t2->add_option( "--n", o.n )->required();
  bound_t2->add_option( "--k", o.k )->required();
  bound_t2->add_option( "--m", o.m )->required();
  auto* bound_t3 = bound->add_subcommand( "t3", "bound for almost all functions" );
  bound_t3->add_option( "--m", o.m )->required();
  bound_t3->add_option( "--k", o.k )->required();
  bound_t3->add_option( "--alpha", o.alpha )->required();
  for ( auto* c : { bound_t2, bound_t3 } )
  {
    add_out( c );
  }

  auto* chernoff = app.add_subcommand( "chernoff", "exact binomial tail against the exponential bound" );
  chernoff->add_option( "--k", o.k )->required();
  chernoff->add_option( "--lambda", o.lambda )->required();
  add_out( chernoff );

  auto* experiment = app.add_subcommand( "experiment", "seeded experiments" )->require_subcommand( 1 );
  auto* exp_t1 = experiment->add_subcommand( "t1", "fraction of random proper functions reducing to the complete one" );
  exp_t1->add_option( "--n", o.n )->required();
  exp_t1->add_option( "--k", o.k )->required();
  auto* exp_t2 = experiment->add_subcommand( "t2sweep", "minimal rank of sampled functions against the bound" );
  exp_t2->add_option( "--n", o.n )->required();
  exp_t2->add_option( "--k", o.k )->required();
  exp_t2->add_option( "--m", o.m )->required();
  exp_t2->add_option( "--format", o.format, "csv or json" )->check( CLI::IsMember( { "csv", "json" } ) );
  add_budget( exp_t2 );
  for ( auto* c : { exp_t1, exp_t2 } )
  {
    c->add_option( "--trials", o.trials )->required();
    c->add_option( "--seed", o.seed );
    add_out( c );
  }

  auto* verify = app.add_subcommand( "verify", "evaluate the literal multiplicity lemma" );
  add_in( verify );
  add_out( verify );
  add_budget( verify );
  verify->add_option( "--literal", o.literal, "signed literal (+j for x_j, -j for ~x_j)" )->required();
  verify->add_option( "--t", o.t, "number of parts" );

  auto* sample = app.add_subcommand( "sample", "random adjacency-free reduced function" );
  sample->add_option( "--n", o.n )->required();
  sample->add_option( "--k", o.k )->required();
  sample->add_option( "--lambda", o.lambda_weight, "minimum column weight" );
  sample->add_option( "--seed", o.seed );
  add_out( sample );

  try
  {
    std::reverse( args.begin(), args.end() );
    app.parse( args );
  }
  catch ( CLI::ParseError const& e )
  {
    if ( e.get_exit_code() == 0 )
    {
      app.exit( e, out, err );
      return ok;
    }
    write_error( err, "UsageError", e.what(), usage );
    return usage;
  }

  io_context io( in, out );
  try
  {
    if ( gen_complete->parsed() )
    {
      io.emit( o.out, matrix_text( complete_function( o.k ) ) );
    }
    else if ( gen_hk->parsed() )
    {
      auto const h = hk_function( o.k );
      io.emit( o.out, matrix_text( h.function, { "H_k k=" + std::to_string( o.k ) + " threshold=" + std::to_string( h.threshold ) + " columns=" + std::to_string( h.columns ) } ) );
    }
    else if ( canon->parsed() )
    {
      auto const f = io.read_matrix( o.in, { wide_matrix_limit } );
      auto const p = to_proper( f );
      json side = make_report( "canon" );
      side["transform"] = to_json( p.transform );
      side["class"] = to_json( classify_matrix( p.function ) );
      auto const r = extract_reduced( p.function );
      side["grouping"] = to_json( r.grouping );
      side["reduced_variables"] = r.function.n();
      auto const text = format_matrix( p.function );
      if ( o.out.empty() || o.out == "-" )
      {
        io.emit( "", text + "# " + side.dump() + '\n' );
      }
      else
      {
        io.emit( o.out, text );
        io.emit( o.out + ".json", side.dump( 2 ) + '\n' );
      }
    }
    else if ( implicants->parsed() )
    {
      auto const f = io.read_matrix( o.in );
      auto const primes = enumerate_prime_implicants( f );
      bool const as_json = o.json_output || o.format == "json";
      if ( as_json )
      {
        json j = make_report( "implicants" );
        j["count"] = primes.size();
        json list = json::array();
        for ( auto const& p : primes )
        {
          list.push_back( to_json( p ) );
        }
        j["implicants"] = list;
        io.emit( o.out, j.dump() + '\n' );
      }
      else
      {
        std::string s;
        for ( auto const& p : primes )
        {
          s += p.to_string() + '\n';
        }
        io.emit( o.out, s );
      }
    }
    else if ( minimize->parsed() )
    {
      auto const f = io.read_matrix( o.in );
      auto const goal = parse_objective( o.objective );
      solve_options so;
      so.node_budget = o.budget;
      json j = make_report( "minimize" );
      j["provenance"] = provenance( o, false );
      if ( o.greedy )
      {
        auto const d = greedy_dnf( f, goal );
        j["objective"] = to_string( goal );
        j["greedy"] = true;
        j["value"] = measure( d, goal );
        j["dnf"] = to_json( d );
      }
      else
      {
        auto const r = minimal_dnf( f, goal, so );
        j.update( to_json( r ) );
        if ( o.all )
        {
          auto const optima = all_minimal_dnfs( f, goal, so );
          json list = json::array();
          for ( auto const& d : optima )
          {
            list.push_back( to_json( d ) );
          }
          j["optima_count"] = optima.size();
          j["optima"] = list;
        }
      }
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( analyze->parsed() )
    {
      auto const f = io.read_matrix( o.in );
      dnf d;
      json j = make_report( "analyze" );
      j["provenance"] = provenance( o, false );
      if ( o.dnf_path.empty() )
      {
        solve_options so;
        so.node_budget = o.budget;
        auto const r = minimal_dnf( f, objective::rank, so );
        d = r.formula;
        j["dnf_source"] = { { "computed", "minimal rank" }, { "proved_optimal", r.proved_optimal } };
      }
      else
      {
        d = dnf_from_json( io.read_json( o.dnf_path ) );
        j["dnf_source"] = { { "file", o.dnf_path } };
      }
      if ( !realizes( f, d ) )
      {
        throw error( error_kind::precondition_violated, "the DNF does not realize the function" );
      }
      auto const mode = o.mode == "strict" ? classification_mode::strict : classification_mode::report;
      auto const c = classify_conjunctions( f, d, mode );
      j["dnf"] = to_json( d );
      j["rank"] = d.rank();
      j["rank_pos"] = d.rank_pos();
      j["rank_neg"] = d.rank_neg();
      j["length"] = d.length();
      j["class"] = to_json( classify_matrix( f ) );
      j["classification"] = to_json( c );
      j["inequalities"] = to_json( check_inequalities( f, d, c ) );
      j["dyakonov"] = to_json( dyakonov_check( f, d ) );
      j["near_zero"] = to_json( near_zero_sets( f ), f.n() );
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( bound_t2->parsed() )
    {
      json j = make_report( "bound_t2" );
      j.update( to_json( theorem2_bound( o.n, o.k, o.m ) ) );
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( bound_t3->parsed() )
    {
      json j = make_report( "bound_t3" );
      j.update( to_json( theorem3_bound( o.m, o.k, o.alpha ) ) );
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( chernoff->parsed() )
    {
      json j = make_report( "chernoff" );
      j.update( to_json( chernoff_tail_check( o.k, o.lambda ) ) );
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( exp_t1->parsed() )
    {
      json j = make_report( "experiment_t1" );
      j["provenance"] = provenance( o, true );
      j.update( to_json( experiment_theorem1( o.n, o.k, o.trials, o.seed ) ) );
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( exp_t2->parsed() )
    {
      solve_options so;
      so.node_budget = o.budget;
      auto const rows = experiment_t2sweep( o.n, o.k, o.m, o.trials, o.seed, so );
      if ( o.format == "json" )
      {
        json j = make_report( "experiment_t2sweep" );
        j["provenance"] = provenance( o, true );
        json list = json::array();
        for ( auto const& r : rows )
        {
          list.push_back( { { "function_id", r.function_id },
                            { "exact_rank", r.exact_rank },
                            { "bound", rational_json( r.bound ) },
                            { "margin", rational_json( r.margin ) },
                            { "proved_optimal", r.proved_optimal },
                            { "matrix", format_matrix( r.function ) } } );
        }
        j["rows"] = list;
        io.emit( o.out, j.dump() + '\n' );
      }
      else
      {
        std::string s = "# " + std::string( schema_name ) + " version=" + std::string( version_string ) + " seed=" + std::to_string( o.seed ) + " budget=" + std::to_string( o.budget ) + '\n';
        s += t2sweep_csv_header() + '\n';
        for ( auto const& r : rows )
        {
          s += to_csv( r ) + '\n';
        }
        io.emit( o.out, s );
      }
    }
    else if ( verify->parsed() )
    {
      auto const f = io.read_matrix( o.in );
      solve_options so;
      so.node_budget = o.budget;
      json j = make_report( "verify" );
      j["provenance"] = provenance( o, false );
      j.update( to_json( verify_cut_lemma( f, literal::from_signed( o.literal ), o.t, so ) ) );
      io.emit( o.out, j.dump() + '\n' );
    }
    else if ( sample->parsed() )
    {
      auto const f = sample_phi( o.n, o.k, o.lambda_weight, o.seed );
      io.emit( o.out, matrix_text( f, { "sample n=" + std::to_string( o.n ) + " k=" + std::to_string( o.k ) + " lambda=" + std::to_string( o.lambda_weight ) + " seed=" + std::to_string( o.seed ) } ) );
    }
  }
  catch ( error const& e )
  {
    auto const code = exit_code_for( e.kind() );
    write_error( err, to_string( e.kind() ), e.detail(), code );
    return code;
  }
  catch ( std::exception const& e )
  {
    write_error( err, "Internal", e.what(), internal );
    return internal;
  }
  return ok;
}

} // namespace facecover::cli
