/*!
  \file urdhva.hpp
  \brief Digit-serial "vertically and crosswise" multiplication in any base

  Column i of the product collects every cross product a[j] * b[k] with
  j + k == i. The column sums are kept in the trace together with the two
  lines of the classic hand layout: the least significant digit of each column
  sum (digit line) and the rest of it (carry line). Adding the carry line,
  shifted one position left, to the digit line gives the product.

  All digit vectors are least significant digit first.
*/
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vedic
{

struct urdhva_trace
{
  unsigned base{ 10 };
  std::vector<std::uint64_t> column_sums;
  std::vector<std::uint64_t> digit_line; // column_sums[i] % base
  std::vector<std::uint64_t> carry_line; // column_sums[i] / base
  std::vector<unsigned> product;         // no leading zeros, except the single digit 0
};

/*! \brief Carry-propagates positional weights (possibly >= base) into canonical digits. */
inline std::vector<unsigned> normalize_digits( std::span<const std::uint64_t> weights, unsigned base )
{
  std::vector<unsigned> digits;
  std::uint64_t carry = 0;
  for ( auto w : weights )
  {
    auto const t = w + carry;
    digits.push_back( static_cast<unsigned>( t % base ) );
    carry = t / base;
  }
  while ( carry != 0u )
  {
    digits.push_back( static_cast<unsigned>( carry % base ) );
    carry /= base;
  }
  while ( digits.size() > 1u && digits.back() == 0u )
  {
    digits.pop_back();
  }
  if ( digits.empty() )
  {
    digits.push_back( 0u );
  }
  return digits;
}

/*! \brief Parses MSD-first text ("234", "1a" in base 16) into LSD-first digits. */
inline std::vector<unsigned> parse_digits( std::string_view text, unsigned base )
{
  if ( text.empty() )
  {
    throw std::invalid_argument( "empty operand" );
  }
  std::vector<unsigned> digits;
  for ( auto it = text.rbegin(); it != text.rend(); ++it )
  {
    char const c = *it;
    unsigned d = base;
    if ( c >= '0' && c <= '9' )
    {
      d = static_cast<unsigned>( c - '0' );
    }
    else if ( c >= 'a' && c <= 'z' )
    {
      d = static_cast<unsigned>( c - 'a' ) + 10u;
    }
    else if ( c >= 'A' && c <= 'Z' )
    {
      d = static_cast<unsigned>( c - 'A' ) + 10u;
    }
    if ( d >= base )
    {
      throw std::invalid_argument( std::string( "'" ) + c + "' is not a base-" + std::to_string( base ) + " digit" );
    }
    digits.push_back( d );
  }
  return digits;
}

/*! \brief Renders LSD-first digits as MSD-first text without leading zeros. */
inline std::string format_digits( std::span<const unsigned> digits )
{
  static constexpr char symbols[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s;
  for ( auto it = digits.rbegin(); it != digits.rend(); ++it )
  {
    if ( s.empty() && *it == 0u )
    {
      continue;
    }
    s.push_back( symbols[*it] );
  }
  return s.empty() ? "0" : s;
}

/*! \brief Value of a trace line (entries may exceed the base) as MSD-first text. */
inline std::string format_line( std::span<const std::uint64_t> line, unsigned base )
{
  auto const digits = normalize_digits( line, base );
  return format_digits( digits );
}

inline urdhva_trace urdhva_multiply( std::span<const unsigned> a, std::span<const unsigned> b, unsigned base )
{
  if ( base < 2u || base > 36u )
  {
    throw std::invalid_argument( "base must be in [2, 36]" );
  }
  if ( a.empty() || b.empty() )
  {
    throw std::invalid_argument( "empty operand" );
  }
  for ( auto d : a )
  {
    if ( d >= base )
    {
      throw std::invalid_argument( "digit " + std::to_string( d ) + " out of range for base " + std::to_string( base ) );
    }
  }
  for ( auto d : b )
  {
    if ( d >= base )
    {
      throw std::invalid_argument( "digit " + std::to_string( d ) + " out of range for base " + std::to_string( base ) );
    }
  }

  urdhva_trace t;
  t.base = base;
  t.column_sums.assign( a.size() + b.size() - 1u, 0u );
  for ( std::size_t j = 0; j < a.size(); ++j )
  {
    for ( std::size_t k = 0; k < b.size(); ++k )
    {
      t.column_sums[j + k] += std::uint64_t{ a[j] } * b[k];
    }
  }

  /* serial pass: each column sum plus the previous carry yields one product digit */
  std::uint64_t carry = 0;
  for ( auto s : t.column_sums )
  {
    t.digit_line.push_back( s % base );
    t.carry_line.push_back( s / base );
    auto const v = s + carry;
    t.product.push_back( static_cast<unsigned>( v % base ) );
    carry = v / base;
  }
  while ( carry != 0u )
  {
    t.product.push_back( static_cast<unsigned>( carry % base ) );
    carry /= base;
  }
  while ( t.product.size() > 1u && t.product.back() == 0u )
  {
    t.product.pop_back();
  }
  return t;
}

inline urdhva_trace urdhva_multiply( std::string_view a, std::string_view b, unsigned base = 10 )
{
  auto const da = parse_digits( a, base );
  auto const db = parse_digits( b, base );
  return urdhva_multiply( da, db, base );
}

} // namespace vedic
