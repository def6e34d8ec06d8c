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
  \file bounds.hpp
  \brief Lower-bound formulas for adjacency-free functions and the binomial tail check

  Exact rational arithmetic is used wherever the formulas are rational;
  the tail bound 2^k e^{-2 lambda^2 / k} is evaluated in long double and
  rounded upward.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "../error.hpp"

namespace facecover
{

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline std::string to_string( rational const& q )
{
  return q.str();
}

inline double to_double( rational const& q )
{
  return static_cast<double>( q );
}

enum class theorem2_regime
{
  eps_le_quarter,
  quarter_lt_eps_lt_third,
  inapplicable
};

inline std::string_view to_string( theorem2_regime r )
{
  switch ( r )
  {
  case theorem2_regime::eps_le_quarter:
    return "eps_le_quarter";
  case theorem2_regime::quarter_lt_eps_lt_third:
    return "quarter_lt_eps_lt_third";
  default:
    return "inapplicable";
  }
}

/*! \brief 10n/3 - 5n eps / (3 (1 + eps)) */
inline rational rank_bound_low_eps( rational const& n, rational const& eps )
{
  return rational( 10 ) * n / 3 - rational( 5 ) * n * eps / ( 3 * ( 1 + eps ) );
}

/*! \brief 10n/3 - 13n eps / (9 + 3 eps) */
inline rational rank_bound_high_eps( rational const& n, rational const& eps )
{
  return rational( 10 ) * n / 3 - rational( 13 ) * n * eps / ( 9 + 3 * eps );
}

/*! \brief eps = 2 (k/2 - m) / k = (k - 2m) / k */
inline rational epsilon_of( std::size_t k, std::size_t m )
{
  return rational( static_cast<long long>( k ) - 2 * static_cast<long long>( m ), static_cast<long long>( k ) );
}

struct theorem2_report
{
  std::size_t n = 0, k = 0, m = 0;
  rational delta; /* k/2 - m */
  rational epsilon;
  rational value;
  theorem2_regime regime = theorem2_regime::inapplicable;
};

/*! \brief Strict lower bound on the rank of any DNF of a function whose
  zero matrix is reduced, adjacency-free and has column weights >= m.

  Needs floor(k/3) + 1 <= m <= k/2, which puts eps below 1/3.
*/
inline theorem2_report theorem2_bound( std::size_t n, std::size_t k, std::size_t m )
{
  if ( k == 0u || 2u * m > k || m < k / 3u + 1u )
  {
    throw error( error_kind::precondition_violated, "rank bound needs floor(k/3)+1 <= m <= k/2 (k=" + std::to_string( k ) + ", m=" + std::to_string( m ) + ")" );
  }
  theorem2_report r;
  r.n = n;
  r.k = k;
  r.m = m;
  r.delta = rational( static_cast<long long>( k ), 2 ) - static_cast<long long>( m );
  r.epsilon = epsilon_of( k, m );
  auto const nn = rational( static_cast<long long>( n ) );
  if ( r.epsilon <= rational( 1, 4 ) )
  {
    r.regime = theorem2_regime::eps_le_quarter;
    r.value = rank_bound_low_eps( nn, r.epsilon );
  }
  else if ( r.epsilon < rational( 1, 3 ) )
  {
    r.regime = theorem2_regime::quarter_lt_eps_lt_third;
    r.value = rank_bound_high_eps( nn, r.epsilon );
  }
  else
  {
    throw error( error_kind::precondition_violated, "eps >= 1/3" );
  }
  return r;
}

struct theorem3_report
{
  std::size_t m = 0, k = 0;
  double alpha = 0.0;
  double log_m = 0.0;
  double lambda = 0.0; /* alpha sqrt(2 log m / k) */
  double first_value = 0.0;
  double second_value = 0.0;
  bool first_applicable = false;  /* log m <= k/32 */
  bool second_applicable = false; /* k/162 < log m < k/32 */
};

/*! \brief Rank bounds for almost all reduced adjacency-free functions of m variables. */
inline theorem3_report theorem3_bound( std::size_t m, std::size_t k, double alpha )
{
  if ( !( alpha > 0.0 && alpha < 1.0 ) )
  {
    throw error( error_kind::precondition_violated, "alpha must lie in (0, 1)" );
  }
  if ( m < 2u || k == 0u )
  {
    throw error( error_kind::precondition_violated, "needs m >= 2 and k >= 1" );
  }
  theorem3_report r;
  r.m = m;
  r.k = k;
  r.alpha = alpha;
  auto const mm = static_cast<long double>( m );
  auto const kk = static_cast<long double>( k );
  auto const lm = std::log( mm );
  auto const lambda = static_cast<long double>( alpha ) * std::sqrt( 2.0L * lm / kk );
  r.log_m = static_cast<double>( lm );
  r.lambda = static_cast<double>( lambda );
  r.first_applicable = lm <= kk / 32.0L;
  r.second_applicable = kk / 162.0L < lm && lm < kk / 32.0L;
  if ( !r.first_applicable && !r.second_applicable )
  {
    throw error( error_kind::precondition_violated, "log m = " + std::to_string( r.log_m ) + " is not below k/32" );
  }
  r.first_value = static_cast<double>( 10.0L * mm / 3.0L - 5.0L * mm * ( 1.0L - lambda ) / ( 3.0L + 3.0L * lambda ) );
  r.second_value = static_cast<double>( 10.0L * mm / 3.0L - 13.0L * mm * ( 1.0L - lambda ) / ( 9.0L + 3.0L * lambda ) );
  return r;
}

struct chernoff_report
{
  std::size_t k = 0;
  double lambda = 0.0;
  big_int exact_sum;       /* sum_{t=0}^{floor(k/2 - lambda)} C(k, t) */
  long double bound = 0.0; /* 2^k e^{-2 lambda^2 / k}, rounded up */
  bool holds = false;
};

inline big_int binomial( std::size_t n, std::size_t r )
{
  if ( r > n )
  {
    return 0;
  }
  big_int c = 1;
  for ( std::size_t i = 1; i <= r; ++i )
  {
    c = c * ( n - r + i ) / i;
  }
  return c;
}

inline chernoff_report chernoff_tail_check( std::size_t k, double lambda )
{
  if ( k == 0u || !( lambda >= 0.0 ) || 2.0 * lambda > static_cast<double>( k ) )
  {
    throw error( error_kind::precondition_violated, "needs k >= 1 and 0 <= lambda <= k/2" );
  }
  chernoff_report r;
  r.k = k;
  r.lambda = lambda;
  auto const kk = static_cast<long double>( k );
  auto const ll = static_cast<long double>( lambda );
  auto const upper = static_cast<long long>( std::floor( kk / 2.0L - ll ) );
  r.exact_sum = 0;
  big_int term = 1;
  for ( long long t = 0; t <= upper; ++t )
  {
    r.exact_sum += term;
    term = term * ( static_cast<long long>( k ) - t ) / ( t + 1 );
  }
  auto b = std::ldexp( std::exp( -2.0L * ll * ll / kk ), static_cast<int>( k ) );
  for ( int i = 0; i < 4; ++i )
  {
    b = std::nextafter( b, std::numeric_limits<long double>::infinity() );
  }
  r.bound = b;
  r.holds = r.exact_sum.convert_to<long double>() <= r.bound;
  return r;
}

} // namespace facecover
