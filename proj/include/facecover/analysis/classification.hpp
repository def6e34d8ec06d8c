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
  \file classification.hpp
  \brief Own literals, the six conjunction classes and the counting inequalities

  A literal is own for a conjunction K of a DNF D when K is the only
  conjunction of D containing it.  Conjunctions are assigned to classes by
  shape with a fixed priority:

    rank 2                                     K5 (x_i x_j) or K6 (x_i ~x_j)
    rank >= 3 with an own negative literal
      all literals negative                    K2
      some positive and another negative       K3
      otherwise                                K4
    one positive literal, the rest negative,
    no own negative literal                    K1
    anything else                              unclassified

  The counters mu_1..mu_6 feed four inequalities on n, the class sizes and
  the positive/negative rank of D; they are evaluated in exact rational
  arithmetic at eps = (k - 2m) / k.
*/

#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "../conjunction.hpp"
#include "../error.hpp"
#include "../zero_matrix.hpp"
#include "bounds.hpp"
#include "near_zero.hpp"

namespace facecover
{

enum class conjunction_class
{
  k1,
  k2,
  k3,
  k4,
  k5,
  k6,
  unclassified
};

inline std::string_view to_string( conjunction_class c )
{
  static constexpr std::array<std::string_view, 7> names{ "K1", "K2", "K3", "K4", "K5", "K6", "UNCLASSIFIED" };
  return names[static_cast<std::size_t>( c )];
}

enum class classification_mode
{
  strict, /* throws when f is not adjacency-free and reduced */
  report  /* classifies anyway and records the violation */
};

struct classified_term
{
  conjunction term;
  conjunction_class cls = conjunction_class::unclassified;
  std::vector<literal> own_literals;
  /* near-zero incidences and points inside the face, (Theta^0, Theta^1) */
  std::pair<std::size_t, std::size_t> incidences;
  std::pair<std::size_t, std::size_t> points;
};

struct classification_report
{
  std::vector<classified_term> terms;
  std::array<std::size_t, 6> mu{}; /* mu[0] = mu_1, ..., mu[5] = mu_6 */
  std::size_t unclassified_count = 0;
  std::map<literal, std::size_t> own_literal_table; /* multiplicity of every literal of D */
  bool precondition_holds = false;                  /* f reduced and adjacency-free */
  std::size_t min_column_weight = 0;

  double unclassified_fraction() const noexcept
  {
    return terms.empty() ? 0.0 : static_cast<double>( unclassified_count ) / static_cast<double>( terms.size() );
  }
};

/*! \brief Class of `c` given which of its literals are own. */
inline conjunction_class classify_shape( conjunction const& c, std::vector<literal> const& own )
{
  auto const rank = c.rank();
  auto const pos = c.rank_pos();
  auto const neg = c.rank_neg();
  if ( rank == 2u )
  {
    if ( pos == 2u )
    {
      return conjunction_class::k5;
    }
    if ( pos == 1u )
    {
      return conjunction_class::k6;
    }
    return conjunction_class::unclassified;
  }
  bool const own_negative = std::any_of( own.begin(), own.end(), []( auto const& l ) { return !l.positive; } );
  if ( rank >= 3u && own_negative )
  {
    if ( pos == 0u )
    {
      return conjunction_class::k2;
    }
    if ( neg >= 2u )
    {
      return conjunction_class::k3;
    }
    return conjunction_class::k4;
  }
  if ( pos == 1u && neg >= 1u && !own_negative )
  {
    return conjunction_class::k1;
  }
  return conjunction_class::unclassified;
}

inline classification_report classify_conjunctions( few_zero_function const& f, dnf const& d, classification_mode mode = classification_mode::strict )
{
  auto const membership = classify_matrix( f );
  classification_report r;
  r.precondition_holds = membership.in_phi();
  r.min_column_weight = membership.min_column_weight;
  if ( !r.precondition_holds && mode == classification_mode::strict )
  {
    throw error( error_kind::precondition_violated, "classification needs a reduced function without adjacent zeros" );
  }
  r.own_literal_table = d.literal_multiplicities();
  auto const nz = near_zero_sets( f );
  for ( auto const& t : d )
  {
    classified_term ct;
    ct.term = t;
    for ( auto const& l : t.literals() )
    {
      if ( r.own_literal_table.at( l ) == 1u )
      {
        ct.own_literals.push_back( l );
      }
    }
    ct.cls = classify_shape( t, ct.own_literals );
    ct.incidences = face_incidences( nz, t );
    ct.points = face_points( nz, t );
    if ( ct.cls == conjunction_class::unclassified )
    {
      ++r.unclassified_count;
    }
    else
    {
      ++r.mu[static_cast<std::size_t>( ct.cls )];
    }
    r.terms.push_back( std::move( ct ) );
  }
  return r;
}

enum class verdict
{
  holds,
  fails,
  not_applicable
};

inline std::string_view to_string( verdict v )
{
  switch ( v )
  {
  case verdict::holds:
    return "true";
  case verdict::fails:
    return "false";
  default:
    return "n/a";
  }
}

struct inequality_check
{
  std::string name;
  rational lhs;
  rational rhs;
  verdict result = verdict::not_applicable;
};

struct inequality_report
{
  rational epsilon;
  std::size_t m = 0; /* smallest column weight of f */
  /* near_zero_theta1, near_zero_theta0: strict, lhs > rhs; positive_rank, negative_rank: actual rank+ / rank- >= bound */
  std::array<inequality_check, 4> checks;

  bool all_hold() const noexcept
  {
    return std::all_of( checks.begin(), checks.end(), []( auto const& c ) { return c.result == verdict::holds; } );
  }
};

/*! \brief The four counting inequalities for a classified DNF.

  Verdicts are n/a unless every conjunction was classified.  eps is taken
  from the smallest column weight m of f; when m exceeds k/2 (impossible
  for proper functions) eps is clamped at 0.
*/
inline inequality_report check_inequalities( few_zero_function const& f, dnf const& d, classification_report const& report )
{
  inequality_report r;
  auto const k = f.k();
  r.m = report.min_column_weight;
  r.epsilon = 2u * r.m <= k ? epsilon_of( k, r.m ) : rational( 0 );
  auto const& eps = r.epsilon;
  auto const n = rational( static_cast<long long>( f.n() ) );
  std::array<rational, 6> mu;
  for ( std::size_t i = 0; i < 6u; ++i )
  {
    mu[i] = rational( static_cast<long long>( report.mu[i] ) );
  }
  auto const& [m1, m2, m3, m4, m5, m6] = mu;

  r.checks[0].name = "near_zero_theta1";
  r.checks[0].lhs = ( 1 + 3 * eps ) * m2 + 2 * eps * m1 + m6 + m4 + m3;
  r.checks[0].rhs = n * ( 1 - eps );
  r.checks[1].name = "near_zero_theta0";
  r.checks[1].lhs = ( 1 + eps ) * m1 + ( 1 + eps ) * m6 + 2 * m5 + eps * m4 + 2 * eps * m3;
  r.checks[1].rhs = n;
  r.checks[2].name = "positive_rank";
  r.checks[2].lhs = rational( static_cast<long long>( d.rank_pos() ) );
  r.checks[2].rhs = std::max<rational>( 2 * n - m1, m1 + 2 * m5 + m6 + 2 * m4 + m3 );
  r.checks[3].name = "negative_rank";
  r.checks[3].lhs = rational( static_cast<long long>( d.rank_neg() ) );
  r.checks[3].rhs = std::max<rational>( 2 * n - m2 - m4 - m3, 3 * m2 + 2 * m1 + m6 + m4 + 2 * m3 );

  if ( report.unclassified_count == 0u )
  {
    r.checks[0].result = r.checks[0].lhs > r.checks[0].rhs ? verdict::holds : verdict::fails;
    r.checks[1].result = r.checks[1].lhs > r.checks[1].rhs ? verdict::holds : verdict::fails;
    r.checks[2].result = r.checks[2].lhs >= r.checks[2].rhs ? verdict::holds : verdict::fails;
    r.checks[3].result = r.checks[3].lhs >= r.checks[3].rhs ? verdict::holds : verdict::fails;
  }
  return r;
}

/*! \brief The two near-zero counting inequalities alone, for synthetic class counts. */
inline std::pair<bool, bool> counting_inequalities_hold( std::size_t n, rational const& eps, std::array<std::size_t, 6> const& counts )
{
  std::array<rational, 6> mu;
  for ( std::size_t i = 0; i < 6u; ++i )
  {
    mu[i] = rational( static_cast<long long>( counts[i] ) );
  }
  auto const& [m1, m2, m3, m4, m5, m6] = mu;
  auto const nn = rational( static_cast<long long>( n ) );
  bool const first = ( 1 + 3 * eps ) * m2 + 2 * eps * m1 + m6 + m4 + m3 > nn * ( 1 - eps );
  bool const second = ( 1 + eps ) * m1 + ( 1 + eps ) * m6 + 2 * m5 + eps * m4 + 2 * eps * m3 > nn;
  return { first, second };
}

} // namespace facecover
