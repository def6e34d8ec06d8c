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
  \file conjunction.hpp
  \brief Literals, conjunctions and DNFs over at most 63 variables

  Variables are 0-based in the API.  The signed textual form used in
  reports is 1-based: +j stands for x_j and -j for its negation.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "zero_matrix.hpp"

namespace facecover
{

struct literal
{
  std::size_t var = 0;
  bool positive = true;

  literal negated() const noexcept { return { var, !positive }; }

  int to_signed() const noexcept
  {
    auto const v = static_cast<int>( var ) + 1;
    return positive ? v : -v;
  }

  static literal from_signed( int s )
  {
    if ( s == 0 )
    {
      throw error( error_kind::invalid_argument, "signed literal 0 is not allowed" );
    }
    return { static_cast<std::size_t>( std::abs( s ) - 1 ), s > 0 };
  }

  friend bool operator==( literal const&, literal const& ) = default;
  friend auto operator<=>( literal const& a, literal const& b ) { return a.to_signed() <=> b.to_signed(); }
};

inline literal pos( std::size_t var ) { return { var, true }; }
inline literal neg( std::size_t var ) { return { var, false }; }

/*! \brief Conjunction of literals, at most one per variable.

  Its face N_K is the set of points on which every literal is true.
*/
class conjunction
{
public:
  conjunction() = default;

  conjunction( std::initializer_list<literal> lits )
  {
    for ( auto const& l : lits )
    {
      add( l );
    }
  }

  explicit conjunction( std::vector<literal> const& lits )
  {
    for ( auto const& l : lits )
    {
      add( l );
    }
  }

  static conjunction from_masks( uint64_t pos_mask, uint64_t neg_mask )
  {
    if ( pos_mask & neg_mask )
    {
      throw error( error_kind::invalid_argument, "conjunction contains a variable and its negation" );
    }
    conjunction c;
    c.pos_ = pos_mask;
    c.neg_ = neg_mask;
    return c;
  }

  static conjunction from_signed( std::vector<int> const& lits )
  {
    conjunction c;
    for ( auto s : lits )
    {
      c.add( literal::from_signed( s ) );
    }
    return c;
  }

  void add( literal l )
  {
    if ( l.var >= max_word_vars )
    {
      throw error( error_kind::index_out_of_range, "variable index " + std::to_string( l.var ) + " exceeds 62" );
    }
    auto const bit = uint64_t( 1 ) << l.var;
    if ( ( pos_ | neg_ ) & bit )
    {
      throw error( error_kind::invalid_argument, "variable x" + std::to_string( l.var + 1 ) + " occurs twice in a conjunction" );
    }
    ( l.positive ? pos_ : neg_ ) |= bit;
  }

  uint64_t pos_mask() const noexcept { return pos_; }
  uint64_t neg_mask() const noexcept { return neg_; }
  uint64_t support() const noexcept { return pos_ | neg_; }

  std::size_t rank() const noexcept { return static_cast<std::size_t>( std::popcount( pos_ | neg_ ) ); }
  std::size_t rank_pos() const noexcept { return static_cast<std::size_t>( std::popcount( pos_ ) ); }
  std::size_t rank_neg() const noexcept { return static_cast<std::size_t>( std::popcount( neg_ ) ); }

  bool contains( literal l ) const noexcept
  {
    if ( l.var >= 64u )
    {
      return false;
    }
    return ( ( l.positive ? pos_ : neg_ ) >> l.var ) & 1u;
  }

  bool mentions( std::size_t var ) const noexcept { return var < 64u && ( ( support() >> var ) & 1u ); }

  conjunction without( literal l ) const
  {
    auto c = *this;
    ( l.positive ? c.pos_ : c.neg_ ) &= ~( uint64_t( 1 ) << l.var );
    return c;
  }

  /*! \brief True iff the point word lies in the face of this conjunction. */
  bool covers( uint64_t point ) const noexcept { return ( point & pos_ ) == pos_ && ( point & neg_ ) == 0u; }

  bool covers( bit_vector const& point ) const
  {
    for ( auto const& l : literals() )
    {
      if ( l.var >= point.size() || point.get( l.var ) != l.positive )
      {
        return false;
      }
    }
    return true;
  }

  /*! \brief Literals ordered by variable index. */
  std::vector<literal> literals() const
  {
    std::vector<literal> v;
    for ( auto s = support(); s != 0u; s &= s - 1u )
    {
      auto const var = static_cast<std::size_t>( std::countr_zero( s ) );
      v.push_back( { var, static_cast<bool>( ( pos_ >> var ) & 1u ) } );
    }
    return v;
  }

  std::vector<int> to_signed() const
  {
    std::vector<int> v;
    for ( auto const& l : literals() )
    {
      v.push_back( l.to_signed() );
    }
    return v;
  }

  std::string to_string() const
  {
    if ( support() == 0u )
    {
      return "1";
    }
    std::string s;
    for ( auto const& l : literals() )
    {
      if ( !s.empty() )
      {
        s += ' ';
      }
      s += l.positive ? "x" : "~x";
      s += std::to_string( l.var + 1 );
    }
    return s;
  }

  friend bool operator==( conjunction const&, conjunction const& ) = default;

  /* lexicographic on the signed literal lists */
  friend std::strong_ordering operator<=>( conjunction const& a, conjunction const& b )
  {
    auto const sa = a.to_signed();
    auto const sb = b.to_signed();
    return std::lexicographical_compare_three_way( sa.begin(), sa.end(), sb.begin(), sb.end() );
  }

private:
  uint64_t pos_ = 0;
  uint64_t neg_ = 0;
};

/*! \brief A set of conjunctions, kept sorted and duplicate-free. */
class dnf
{
public:
  dnf() = default;

  explicit dnf( std::vector<conjunction> terms ) : terms_( std::move( terms ) )
  {
    std::sort( terms_.begin(), terms_.end() );
    terms_.erase( std::unique( terms_.begin(), terms_.end() ), terms_.end() );
  }

  dnf( std::initializer_list<conjunction> terms ) : dnf( std::vector<conjunction>( terms ) ) {}

  static dnf from_signed( std::vector<std::vector<int>> const& terms )
  {
    std::vector<conjunction> v;
    for ( auto const& t : terms )
    {
      v.push_back( conjunction::from_signed( t ) );
    }
    return dnf( std::move( v ) );
  }

  std::vector<conjunction> const& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  std::size_t length() const noexcept { return terms_.size(); }

  std::size_t rank() const noexcept
  {
    std::size_t r = 0;
    for ( auto const& t : terms_ )
    {
      r += t.rank();
    }
    return r;
  }

  std::size_t rank_pos() const noexcept
  {
    std::size_t r = 0;
    for ( auto const& t : terms_ )
    {
      r += t.rank_pos();
    }
    return r;
  }

  std::size_t rank_neg() const noexcept
  {
    std::size_t r = 0;
    for ( auto const& t : terms_ )
    {
      r += t.rank_neg();
    }
    return r;
  }

  bool evaluate( uint64_t point ) const noexcept
  {
    return std::any_of( terms_.begin(), terms_.end(), [point]( auto const& t ) { return t.covers( point ); } );
  }

  /*! \brief Number of conjunctions containing `l`. */
  std::size_t multiplicity( literal l ) const noexcept
  {
    return static_cast<std::size_t>( std::count_if( terms_.begin(), terms_.end(), [&]( auto const& t ) { return t.contains( l ); } ) );
  }

  /*! \brief Multiplicity of every literal occurring in the DNF. */
  std::map<literal, std::size_t> literal_multiplicities() const
  {
    std::map<literal, std::size_t> m;
    for ( auto const& t : terms_ )
    {
      for ( auto const& l : t.literals() )
      {
        ++m[l];
      }
    }
    return m;
  }

  uint64_t support() const noexcept
  {
    uint64_t s = 0;
    for ( auto const& t : terms_ )
    {
      s |= t.support();
    }
    return s;
  }

  std::vector<std::vector<int>> to_signed() const
  {
    std::vector<std::vector<int>> v;
    for ( auto const& t : terms_ )
    {
      v.push_back( t.to_signed() );
    }
    return v;
  }

  std::string to_string() const
  {
    if ( terms_.empty() )
    {
      return "0";
    }
    std::string s;
    for ( auto const& t : terms_ )
    {
      if ( !s.empty() )
      {
        s += " | ";
      }
      s += t.to_string();
    }
    return s;
  }

  friend bool operator==( dnf const&, dnf const& ) = default;
  friend auto operator<=>( dnf const& a, dnf const& b ) { return a.terms_ <=> b.terms_; }

private:
  std::vector<conjunction> terms_;
};

} // namespace facecover
