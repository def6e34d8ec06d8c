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
  \file bit_vector.hpp
  \brief Fixed-length 0/1 vectors

  A `bit_vector` is used for points of the n-cube, for columns of a zero
  matrix (elements of B_k) and for literal-associated row-incidence vectors.
  Position 0 is the leftmost character of the textual form.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace facecover
{

class bit_vector
{
public:
  bit_vector() = default;

  explicit bit_vector( std::size_t length )
      : length_( length ), words_( ( length + 63u ) / 64u, 0u )
  {
  }

  static bit_vector ones( std::size_t length )
  {
    bit_vector v( length );
    for ( auto& w : v.words_ )
    {
      w = ~uint64_t( 0 );
    }
    v.clear_tail();
    return v;
  }

  /*! \brief Builds a vector from the low `length` bits of `word` (bit i is position i). */
  static bit_vector from_word( uint64_t word, std::size_t length )
  {
    if ( length > 64u )
    {
      throw error( error_kind::invalid_argument, "from_word supports at most 64 positions" );
    }
    bit_vector v( length );
    if ( length > 0u )
    {
      v.words_[0] = word;
      v.clear_tail();
    }
    return v;
  }

  static bit_vector from_string( std::string_view text )
  {
    bit_vector v( text.size() );
    for ( std::size_t i = 0; i < text.size(); ++i )
    {
      if ( text[i] == '1' )
      {
        v.set( i, true );
      }
      else if ( text[i] != '0' )
      {
        throw error( error_kind::invalid_argument, "bit_vector text must contain only '0' and '1'" );
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0u; }

  bool get( std::size_t i ) const
  {
    check_index( i );
    return ( words_[i >> 6] >> ( i & 63u ) ) & 1u;
  }

  bool operator[]( std::size_t i ) const { return get( i ); }

  void set( std::size_t i, bool value )
  {
    check_index( i );
    auto const mask = uint64_t( 1 ) << ( i & 63u );
    if ( value )
    {
      words_[i >> 6] |= mask;
    }
    else
    {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip( std::size_t i )
  {
    check_index( i );
    words_[i >> 6] ^= uint64_t( 1 ) << ( i & 63u );
  }

  std::size_t count() const noexcept
  {
    std::size_t c = 0;
    for ( auto w : words_ )
    {
      c += static_cast<std::size_t>( std::popcount( w ) );
    }
    return c;
  }

  bool none() const noexcept
  {
    return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
  }

  bool all() const noexcept { return count() == length_; }

  bit_vector complement() const
  {
    bit_vector v( *this );
    for ( auto& w : v.words_ )
    {
      w = ~w;
    }
    v.clear_tail();
    return v;
  }

  bit_vector operator~() const { return complement(); }

  bit_vector& operator|=( bit_vector const& other )
  {
    check_same_length( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  bit_vector& operator&=( bit_vector const& other )
  {
    check_same_length( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] &= other.words_[i];
    }
    return *this;
  }

  bit_vector& operator^=( bit_vector const& other )
  {
    check_same_length( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] ^= other.words_[i];
    }
    return *this;
  }

  friend bit_vector operator|( bit_vector lhs, bit_vector const& rhs ) { return lhs |= rhs; }
  friend bit_vector operator&( bit_vector lhs, bit_vector const& rhs ) { return lhs &= rhs; }
  friend bit_vector operator^( bit_vector lhs, bit_vector const& rhs ) { return lhs ^= rhs; }

  /*! \brief Inner product over the integers, i.e. the size of the common support. */
  std::size_t inner_product( bit_vector const& other ) const
  {
    check_same_length( other );
    std::size_t c = 0;
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      c += static_cast<std::size_t>( std::popcount( words_[i] & other.words_[i] ) );
    }
    return c;
  }

  bool is_subset_of( bit_vector const& other ) const
  {
    check_same_length( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      if ( words_[i] & ~other.words_[i] )
      {
        return false;
      }
    }
    return true;
  }

  uint64_t to_word() const
  {
    if ( length_ > 64u )
    {
      throw error( error_kind::invalid_argument, "to_word supports at most 64 positions" );
    }
    return words_.empty() ? 0u : words_[0];
  }

  std::vector<uint64_t> const& words() const noexcept { return words_; }

  std::string to_string() const
  {
    std::string s( length_, '0' );
    for ( std::size_t i = 0; i < length_; ++i )
    {
      if ( ( words_[i >> 6] >> ( i & 63u ) ) & 1u )
      {
        s[i] = '1';
      }
    }
    return s;
  }

  friend bool operator==( bit_vector const&, bit_vector const& ) = default;

  /* lexicographic in textual order: the first differing position decides, 0 < 1 */
  friend std::strong_ordering operator<=>( bit_vector const& a, bit_vector const& b )
  {
    if ( a.length_ != b.length_ )
    {
      return a.length_ <=> b.length_;
    }
    for ( std::size_t i = 0; i < a.words_.size(); ++i )
    {
      auto const diff = a.words_[i] ^ b.words_[i];
      if ( diff != 0u )
      {
        auto const low = diff & ( ~diff + 1u );
        return ( a.words_[i] & low ) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept
  {
    std::size_t h = length_ * 0x9e3779b97f4a7c15ull;
    for ( auto w : words_ )
    {
      h ^= w + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    }
    return h;
  }

private:
  void check_index( std::size_t i ) const
  {
    if ( i >= length_ )
    {
      throw error( error_kind::index_out_of_range, "bit index " + std::to_string( i ) + " >= length " + std::to_string( length_ ) );
    }
  }

  void check_same_length( bit_vector const& other ) const
  {
    if ( other.length_ != length_ )
    {
      throw error( error_kind::length_mismatch, "bit vectors of length " + std::to_string( length_ ) + " and " + std::to_string( other.length_ ) );
    }
  }

  void clear_tail()
  {
    if ( auto const r = length_ & 63u; r != 0u && !words_.empty() )
    {
      words_.back() &= ( uint64_t( 1 ) << r ) - 1u;
    }
  }

  std::size_t length_ = 0;
  std::vector<uint64_t> words_;
};

/*! \brief Minimum of the number of ones and the number of zeros. */
inline std::size_t weight( bit_vector const& v )
{
  auto const ones = v.count();
  return std::min( ones, v.size() - ones );
}

inline std::size_t hamming_distance( bit_vector const& p, bit_vector const& q )
{
  return ( p ^ q ).count();
}

inline bool hamming_adjacent( bit_vector const& p, bit_vector const& q )
{
  return hamming_distance( p, q ) == 1u;
}

struct bit_vector_hash
{
  std::size_t operator()( bit_vector const& v ) const noexcept { return v.hash(); }
};

} // namespace facecover
