/*!
  \file bit_vector.hpp
  \brief Fixed-width bit vectors carrying integer values through netlists

  Bits are stored least significant first.
*/
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vedic
{

enum class interpretation
{
  unsigned_int,
  twos_complement
};

class bit_vector
{
public:
  bit_vector() = default;

  bit_vector( std::vector<bool> bits, interpretation interp = interpretation::unsigned_int )
      : bits_( std::move( bits ) ), interp_( interp )
  {
  }

  /*! \brief Encodes `value` into `width` bits; throws std::out_of_range if it does not fit. */
  static bit_vector from_int( std::int64_t value, std::size_t width, interpretation interp = interpretation::unsigned_int )
  {
    if ( width == 0u || width > 63u )
    {
      throw std::invalid_argument( "bit_vector width must be in [1, 63]" );
    }
    if ( value < min_value( width, interp ) || value > max_value( width, interp ) )
    {
      throw std::out_of_range( "value " + std::to_string( value ) + " does not fit in " + std::to_string( width ) +
                               ( interp == interpretation::twos_complement ? " signed" : " unsigned" ) + " bits" );
    }
    std::vector<bool> bits( width );
    const auto raw = static_cast<std::uint64_t>( value );
    for ( std::size_t i = 0; i < width; ++i )
    {
      bits[i] = ( ( raw >> i ) & 1u ) != 0u;
    }
    return bit_vector( std::move( bits ), interp );
  }

  static std::int64_t min_value( std::size_t width, interpretation interp )
  {
    return interp == interpretation::twos_complement ? -( std::int64_t{ 1 } << ( width - 1u ) ) : 0;
  }

  static std::int64_t max_value( std::size_t width, interpretation interp )
  {
    return interp == interpretation::twos_complement ? ( std::int64_t{ 1 } << ( width - 1u ) ) - 1
                                                     : ( std::int64_t{ 1 } << width ) - 1;
  }

  std::size_t width() const noexcept { return bits_.size(); }
  interpretation kind() const noexcept { return interp_; }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  bool operator[]( std::size_t i ) const { return bits_.at( i ); }

  /*! \brief Same bits, different interpretation. */
  bit_vector as( interpretation interp ) const { return bit_vector( bits_, interp ); }

  std::uint64_t to_unsigned() const
  {
    std::uint64_t v = 0;
    for ( std::size_t i = bits_.size(); i-- > 0; )
    {
      v = ( v << 1u ) | ( bits_[i] ? 1u : 0u );
    }
    return v;
  }

  std::int64_t to_signed() const
  {
    if ( bits_.empty() )
    {
      return 0;
    }
    auto const u = static_cast<std::int64_t>( to_unsigned() );
    return bits_.back() ? u - ( std::int64_t{ 1 } << bits_.size() ) : u;
  }

  /*! \brief Decodes according to the vector's own interpretation. */
  std::int64_t value() const
  {
    return interp_ == interpretation::twos_complement ? to_signed() : static_cast<std::int64_t>( to_unsigned() );
  }

  /*! \brief MSB-first binary string, e.g. "0101". */
  std::string to_string() const
  {
    std::string s;
    s.reserve( bits_.size() );
    for ( std::size_t i = bits_.size(); i-- > 0; )
    {
      s.push_back( bits_[i] ? '1' : '0' );
    }
    return s;
  }

  friend bool operator==( const bit_vector& a, const bit_vector& b ) { return a.bits_ == b.bits_; }

private:
  std::vector<bool> bits_;
  interpretation interp_{ interpretation::unsigned_int };
};

} // namespace vedic
