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
  \file report.hpp
  \brief JSON and CSV serialization of results ("facecover/1" schema)

  Conjunctions are lists of signed 1-based variable indices (+j for x_j,
  -j for ~x_j) sorted by variable; DNFs are sorted lists of conjunctions.
  Rationals are emitted both exactly (as "p/q" strings) and as doubles.
*/

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis/bounds.hpp"
#include "analysis/classification.hpp"
#include "analysis/cuts.hpp"
#include "analysis/experiments.hpp"
#include "analysis/near_zero.hpp"
#include "canon.hpp"
#include "conjunction.hpp"
#include "error.hpp"
#include "solver.hpp"
#include "zero_matrix.hpp"

namespace facecover
{

using json = nlohmann::ordered_json;

inline constexpr std::string_view schema_name = "facecover/1";
inline constexpr std::string_view version_string = "1.0.0";

/*! \brief Report skeleton with schema, version and provenance fields. */
inline json make_report( std::string_view kind )
{
  json j;
  j["schema"] = schema_name;
  j["version"] = version_string;
  j["kind"] = kind;
  return j;
}

inline json rational_json( rational const& q )
{
  return { { "exact", to_string( q ) }, { "value", to_double( q ) } };
}

inline json to_json( conjunction const& c ) { return c.to_signed(); }

inline json to_json( dnf const& d ) { return d.to_signed(); }

inline dnf dnf_from_json( json const& j )
{
  auto const& arr = j.contains( "dnf" ) ? j.at( "dnf" ) : j;
  if ( !arr.is_array() )
  {
    throw error( error_kind::invalid_argument, "DNF must be a JSON array of signed-integer lists" );
  }
  std::vector<std::vector<int>> terms;
  for ( auto const& t : arr )
  {
    if ( !t.is_array() )
    {
      throw error( error_kind::invalid_argument, "conjunction must be a JSON array of signed integers" );
    }
    terms.push_back( t.get<std::vector<int>>() );
  }
  return dnf::from_signed( terms );
}

inline json to_json( sp_transform const& t )
{
  json neg = json::array();
  for ( std::size_t j = 0; j < t.size(); ++j )
  {
    neg.push_back( t.neg.get( j ) ? 1 : 0 );
  }
  return { { "perm", t.perm }, { "neg", neg } };
}

inline json to_json( column_grouping const& g )
{
  json groups = json::array();
  for ( auto const& [b, e] : g.groups )
  {
    groups.push_back( { b, e } );
  }
  return { { "groups", groups }, { "representatives", g.representatives } };
}

inline json to_json( class_membership const& c )
{
  return { { "has_constant_column", c.has_constant_column },
           { "rows_distinct", c.rows_distinct },
           { "has_adjacent_zeros", c.has_adjacent_zeros },
           { "is_proper", c.is_proper },
           { "is_reduced", c.is_reduced },
           { "is_complete", c.is_complete },
           { "min_column_weight", c.min_column_weight },
           { "ones_le_zeros_all_columns", c.ones_le_zeros_all_columns },
           { "in_phi", c.in_phi() } };
}

inline json to_json( solve_result const& r )
{
  return { { "objective", to_string( r.goal ) },
           { "optimum", r.optimum },
           { "dnf", to_json( r.formula ) },
           { "rank", r.formula.rank() },
           { "length", r.formula.length() },
           { "proved_optimal", r.proved_optimal },
           { "nodes_explored", r.nodes_explored },
           { "search_space", "prime implicants" } };
}

inline json to_json( classification_report const& r )
{
  json terms = json::array();
  for ( auto const& t : r.terms )
  {
    json own = json::array();
    for ( auto const& l : t.own_literals )
    {
      own.push_back( l.to_signed() );
    }
    terms.push_back( { { "conjunction", to_json( t.term ) },
                       { "class", to_string( t.cls ) },
                       { "own_literals", own },
                       { "theta0_incidences", t.incidences.first },
                       { "theta1_incidences", t.incidences.second },
                       { "theta0_points", t.points.first },
                       { "theta1_points", t.points.second } } );
  }
  json table = json::array();
  for ( auto const& [l, m] : r.own_literal_table )
  {
    table.push_back( { { "literal", l.to_signed() }, { "multiplicity", m }, { "own", m == 1u } } );
  }
  return { { "precondition_holds", r.precondition_holds },
           { "min_column_weight", r.min_column_weight },
           { "mu", r.mu },
           { "unclassified_count", r.unclassified_count },
           { "unclassified_fraction", r.unclassified_fraction() },
           { "terms", terms },
           { "literal_table", table } };
}

inline json to_json( inequality_report const& r )
{
  json checks = json::array();
  for ( auto const& c : r.checks )
  {
    checks.push_back( { { "inequality", c.name }, { "lhs", rational_json( c.lhs ) }, { "rhs", rational_json( c.rhs ) }, { "verdict", to_string( c.result ) } } );
  }
  return { { "m", r.m }, { "epsilon", rational_json( r.epsilon ) }, { "checks", checks } };
}

inline json to_json( dyakonov_report const& r )
{
  json v = json::array();
  for ( auto const& x : r.violations )
  {
    v.push_back( { { "term", x.term }, { "row", x.row }, { "count", x.count } } );
  }
  return { { "max_incidence", r.max_incidence }, { "holds", r.holds() }, { "violations", v } };
}

inline json to_json( theorem2_report const& r )
{
  return { { "n", r.n }, { "k", r.k }, { "m", r.m }, { "delta", rational_json( r.delta ) }, { "epsilon", rational_json( r.epsilon ) }, { "regime", to_string( r.regime ) }, { "bound", rational_json( r.value ) } };
}

inline json to_json( theorem3_report const& r )
{
  return { { "m", r.m },
           { "k", r.k },
           { "alpha", r.alpha },
           { "log_m", r.log_m },
           { "lambda", r.lambda },
           { "first", { { "applicable", r.first_applicable }, { "value", r.first_value } } },
           { "second", { { "applicable", r.second_applicable }, { "value", r.second_value } } } };
}

inline json to_json( chernoff_report const& r )
{
  std::ostringstream bound;
  bound.precision( 21 );
  bound << r.bound;
  return { { "k", r.k }, { "lambda", r.lambda }, { "exact_sum", r.exact_sum.str() }, { "bound", bound.str() }, { "holds", r.holds } };
}

inline json to_json( theorem1_report const& r )
{
  return { { "n", r.n },
           { "k", r.k },
           { "trials", r.trials },
           { "complete_count", r.complete_count },
           { "fraction", r.fraction },
           { "threshold", r.threshold },
           { "below_threshold", r.below_threshold },
           { "sampling", "uniform over k x n matrices with distinct rows and no constant column" } };
}

inline json to_json( cut_lemma_report const& r )
{
  return { { "literal", r.lit.to_signed() },
           { "t", r.t },
           { "in_phi", r.in_phi },
           { "hypothesis_holds", r.hypothesis_holds },
           { "conclusion_holds_on_all_checked_dnfs", r.conclusion_holds_on_all_checked_dnfs },
           { "dnfs_checked", r.dnfs_checked },
           { "min_multiplicity", r.min_multiplicity },
           { "selection_hypothesis_violations", r.selection_violations },
           { "scope", "all optimal prime-implicant DNFs, rank and length" } };
}

inline json to_json( near_zero_report const& r, std::size_t n )
{
  auto points = [n]( auto const& v ) {
    json a = json::array();
    for ( auto p : v )
    {
      a.push_back( bit_vector::from_word( p, n ).to_string() );
    }
    return a;
  };
  return { { "theta_points", points( r.theta_points ) },
           { "theta0_points", points( r.theta0_points ) },
           { "theta1_points", points( r.theta1_points ) },
           { "theta0_incidences", r.theta0_incidences.size() },
           { "theta1_incidences", r.theta1_incidences.size() } };
}

inline std::string t2sweep_csv_header() { return "function_id,n,k,m,epsilon,exact_rank,bound,margin,proved_optimal"; }

inline std::string to_csv( t2sweep_row const& r )
{
  std::ostringstream s;
  s << r.function_id << ',' << r.n << ',' << r.k << ',' << r.m << ',' << to_string( r.epsilon ) << ',' << r.exact_rank << ',' << to_string( r.bound ) << ','
    << to_string( r.margin ) << ',' << ( r.proved_optimal ? "true" : "false" );
  return s.str();
}

} // namespace facecover
