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
  \file near_zero.hpp
  \brief Near-zero points of few-zero functions and the per-zero incidence check

  The near-zero point theta(i, j) is zero row i with coordinate j flipped.
  It belongs to Theta^1 when entry (i, j) of the zero matrix is 1 and to
  Theta^0 otherwise; points that are themselves zeros of f are dropped from
  the point sets but every incidence (i, j) is kept for counting.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "../conjunction.hpp"
#include "../zero_matrix.hpp"

namespace facecover
{

struct near_zero_incidence
{
  std::size_t row = 0; /* zero row i */
  std::size_t var = 0; /* flipped coordinate j */
  uint64_t point = 0;
  bool on_one = false; /* entry (i, j) of the matrix is 1 */

  friend bool operator==( near_zero_incidence const&, near_zero_incidence const& ) = default;
};

struct near_zero_report
{
  /* incidences (i, j) whose point is a one of f */
  std::vector<near_zero_incidence> theta0_incidences;
  std::vector<near_zero_incidence> theta1_incidences;
  /* sorted, duplicate-free point words */
  std::vector<uint64_t> theta_points;
  std::vector<uint64_t> theta0_points;
  std::vector<uint64_t> theta1_points;
};

inline uint64_t near_zero_point( few_zero_function const& f, std::size_t row, std::size_t var )
{
  return f.matrix().row_word( row ) ^ ( uint64_t( 1 ) << var );
}

/*! \brief Theta, Theta^0 and Theta^1 as point sets and incidence lists; needs n <= 63. */
inline near_zero_report near_zero_sets( few_zero_function const& f )
{
  f.matrix().require_word_points();
  near_zero_report r;
  for ( std::size_t i = 0; i < f.k(); ++i )
  {
    auto const row = f.matrix().row_word( i );
    for ( std::size_t j = 0; j < f.n(); ++j )
    {
      auto const p = near_zero_point( f, i, j );
      if ( !f.evaluate( p ) )
      {
        continue;
      }
      near_zero_incidence inc{ i, j, p, static_cast<bool>( ( row >> j ) & 1u ) };
      ( inc.on_one ? r.theta1_incidences : r.theta0_incidences ).push_back( inc );
      ( inc.on_one ? r.theta1_points : r.theta0_points ).push_back( p );
      r.theta_points.push_back( p );
    }
  }
  for ( auto* v : { &r.theta_points, &r.theta0_points, &r.theta1_points } )
  {
    std::sort( v->begin(), v->end() );
    v->erase( std::unique( v->begin(), v->end() ), v->end() );
  }
  return r;
}

/*! \brief Near-zero incidences of `r` lying in the face of `c`, split by type. */
inline std::pair<std::size_t, std::size_t> face_incidences( near_zero_report const& r, conjunction const& c )
{
  auto count = [&]( auto const& v ) {
    return static_cast<std::size_t>( std::count_if( v.begin(), v.end(), [&]( auto const& inc ) { return c.covers( inc.point ); } ) );
  };
  return { count( r.theta0_incidences ), count( r.theta1_incidences ) };
}

/*! \brief Near-zero points of `r` lying in the face of `c`, split by type. */
inline std::pair<std::size_t, std::size_t> face_points( near_zero_report const& r, conjunction const& c )
{
  auto count = [&]( auto const& v ) {
    return static_cast<std::size_t>( std::count_if( v.begin(), v.end(), [&]( auto p ) { return c.covers( p ); } ) );
  };
  return { count( r.theta0_points ), count( r.theta1_points ) };
}

struct dyakonov_violation
{
  std::size_t term = 0; /* index into the DNF */
  std::size_t row = 0;
  std::size_t count = 0;
};

struct dyakonov_report
{
  std::size_t max_incidence = 0;
  std::vector<dyakonov_violation> violations; /* (K, i) pairs with count > 1 */

  bool holds() const noexcept { return violations.empty(); }
};

/*! \brief For every conjunction K and zero row i, the number of points
  theta(i, j) in the face of K that are ones of f; expected at most 1 for
  prime implicants. */
inline dyakonov_report dyakonov_check( few_zero_function const& f, dnf const& d )
{
  f.matrix().require_word_points();
  dyakonov_report r;
  std::size_t idx = 0;
  for ( auto const& t : d )
  {
    for ( std::size_t i = 0; i < f.k(); ++i )
    {
      std::size_t count = 0;
      for ( std::size_t j = 0; j < f.n(); ++j )
      {
        auto const p = near_zero_point( f, i, j );
        if ( t.covers( p ) && f.evaluate( p ) )
        {
          ++count;
        }
      }
      r.max_incidence = std::max( r.max_incidence, count );
      if ( count > 1u )
      {
        r.violations.push_back( { idx, i, count } );
      }
    }
    ++idx;
  }
  return r;
}

} // namespace facecover
