/*!
  \file arith.hpp
  \brief Arithmetic units as netlists: Vedic 2x2/4x4 multipliers, array multiplier, ripple adder and subtractor

  Each unit comes in two forms. The lower-case "emit" functions instantiate the
  unit inside an existing builder on caller-provided nets, which is how larger
  units are composed. The `build_*` functions wrap one instance into a
  standalone netlist with canonical bus names.
*/
#pragma once

#include "netlist.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vedic
{

using bus_bits = std::vector<net_id>;

enum class multiplier_impl
{
  vedic,
  array
};

constexpr std::string_view to_string( multiplier_impl impl ) noexcept
{
  return impl == multiplier_impl::vedic ? "vedic" : "array";
}

inline std::optional<multiplier_impl> multiplier_impl_from_string( std::string_view s ) noexcept
{
  if ( s == "vedic" )
  {
    return multiplier_impl::vedic;
  }
  if ( s == "array" )
  {
    return multiplier_impl::array;
  }
  return std::nullopt;
}

/* wiring helpers, no gates */

inline bus_bits zeros( const netlist_builder& b, std::size_t width )
{
  return bus_bits( width, b.const0() );
}

/*! \brief Widens by repeating the MSB, or drops high bits when `width` is smaller. */
inline bus_bits resize_signed( std::span<const net_id> x, std::size_t width )
{
  bus_bits r( x.begin(), x.begin() + static_cast<std::ptrdiff_t>( std::min( width, x.size() ) ) );
  while ( r.size() < width )
  {
    r.push_back( x.back() );
  }
  return r;
}

inline bus_bits resize_unsigned( const netlist_builder& b, std::span<const net_id> x, std::size_t width )
{
  bus_bits r( x.begin(), x.begin() + static_cast<std::ptrdiff_t>( std::min( width, x.size() ) ) );
  r.resize( width, b.const0() );
  return r;
}

/* adders */

struct adder_nets
{
  bus_bits sum;
  net_id carry;
};

/*! \brief sum = a ^ b ^ c, carry = majority(a, b, c); 2 XOR, 2 AND, 1 OR. */
inline std::pair<net_id, net_id> emit_full_adder( netlist_builder& b, net_id x, net_id y, net_id c )
{
  auto const p = b.xor_( x, y );
  auto const s = b.xor_( p, c );
  auto const g = b.and_( x, y );
  auto const t = b.and_( c, p );
  return { s, b.or_( g, t ) };
}

inline adder_nets emit_ripple_adder( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y, net_id cin )
{
  if ( x.size() != y.size() || x.empty() )
  {
    throw std::invalid_argument( "ripple adder operands must have equal, non-zero width" );
  }
  adder_nets r{ {}, cin };
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    auto const [s, c] = emit_full_adder( b, x[i], y[i], r.carry );
    r.sum.push_back( s );
    r.carry = c;
  }
  return r;
}

/*! \brief x - y as x + ~y + 1; the returned carry is the borrow (inverted carry-out). */
inline adder_nets emit_ripple_subtractor( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y )
{
  bus_bits inv;
  for ( auto n : y )
  {
    inv.push_back( b.not_( n ) );
  }
  auto r = emit_ripple_adder( b, x, inv, b.const1() );
  r.carry = b.not_( r.carry );
  return r;
}

/*! \brief Two's-complement x + y at `width` bits (operands sign-extended). */
inline bus_bits emit_signed_add( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y, std::size_t width )
{
  auto const xs = resize_signed( x, width );
  auto const ys = resize_signed( y, width );
  return emit_ripple_adder( b, xs, ys, b.const0() ).sum;
}

inline bus_bits emit_signed_sub( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y, std::size_t width )
{
  auto const xs = resize_signed( x, width );
  auto const ys = resize_signed( y, width );
  return emit_ripple_subtractor( b, xs, ys ).sum;
}

/*! \brief -x at `width` bits, computed as 0 - x with the subtractor. */
inline bus_bits emit_negate( netlist_builder& b, std::span<const net_id> x, std::size_t width )
{
  auto const z = zeros( b, width );
  return emit_signed_sub( b, z, x, width );
}

/* multipliers */

/*! \brief Binary vertically-and-crosswise 2x2 product: 6 AND, 2 XOR. */
inline bus_bits emit_vedic2x2( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y )
{
  if ( x.size() != 2u || y.size() != 2u )
  {
    throw std::invalid_argument( "vedic2x2 takes 2-bit operands" );
  }
  auto const p0 = b.and_( x[0], y[0] );
  auto const c1 = b.and_( x[1], y[0] );
  auto const c2 = b.and_( x[0], y[1] );
  auto const p1 = b.xor_( c1, c2 );
  auto const carry = b.and_( c1, c2 );
  auto const top = b.and_( x[1], y[1] );
  auto const p2 = b.xor_( top, carry );
  auto const p3 = b.and_( top, carry );
  return { p0, p1, p2, p3 };
}

/*!
  \brief 4x4 product from four 2x2 blocks.

  With P0 = xL*yL, P1 = xH*yL, P2 = xL*yH, P3 = xH*yH the product is
  P0 + ((P1 + P2) << 2) + (P3 << 4). P0 and P3 << 4 do not overlap, so they are
  concatenated and only two ripple adders are needed: a 4-bit one for P1 + P2
  and a 6-bit one adding that sum into bits 2..7.
*/
inline bus_bits emit_vedic4x4( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y )
{
  if ( x.size() != 4u || y.size() != 4u )
  {
    throw std::invalid_argument( "vedic4x4 takes 4-bit operands" );
  }
  auto const xl = x.subspan( 0, 2 ), xh = x.subspan( 2, 2 );
  auto const yl = y.subspan( 0, 2 ), yh = y.subspan( 2, 2 );

  auto const p0 = emit_vedic2x2( b, xl, yl );
  auto const p1 = emit_vedic2x2( b, xh, yl );
  auto const p2 = emit_vedic2x2( b, xl, yh );
  auto const p3 = emit_vedic2x2( b, xh, yh );

  auto const mid = emit_ripple_adder( b, p1, p2, b.const0() );
  bus_bits mid5 = mid.sum;
  mid5.push_back( mid.carry );

  bus_bits const upper = { p0[2], p0[3], p3[0], p3[1], p3[2], p3[3] };
  auto const high = emit_ripple_adder( b, upper, resize_unsigned( b, mid5, 6u ), b.const0() );

  bus_bits p = { p0[0], p0[1] };
  p.insert( p.end(), high.sum.begin(), high.sum.end() );
  return p;
}

/*! \brief Shift-and-add array: 16 AND partial products, three 4-bit ripple adder rows. */
inline bus_bits emit_array4x4( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y )
{
  if ( x.size() != 4u || y.size() != 4u )
  {
    throw std::invalid_argument( "array4x4 takes 4-bit operands" );
  }
  std::array<bus_bits, 4> pp;
  for ( std::size_t i = 0; i < 4u; ++i )
  {
    for ( std::size_t j = 0; j < 4u; ++j )
    {
      pp[i].push_back( b.and_( x[j], y[i] ) );
    }
  }

  bus_bits p = { pp[0][0] };
  bus_bits acc = pp[0];
  net_id carry = b.const0();
  for ( std::size_t i = 1; i < 4u; ++i )
  {
    bus_bits const shifted = { acc[1], acc[2], acc[3], carry };
    auto const row = emit_ripple_adder( b, shifted, pp[i], b.const0() );
    p.push_back( row.sum[0] );
    acc = row.sum;
    carry = row.carry;
  }
  p.insert( p.end(), acc.begin() + 1, acc.end() );
  p.push_back( carry );
  return p;
}

inline bus_bits emit_unsigned4x4( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y, multiplier_impl impl )
{
  return impl == multiplier_impl::vedic ? emit_vedic4x4( b, x, y ) : emit_array4x4( b, x, y );
}

struct signed_product_nets
{
  bus_bits product; // 8 bits, two's complement
  net_id saturated;
};

namespace detail
{

/* |x| for 4-bit two's complement; |-8| is clamped to 7 and reported */
inline std::pair<bus_bits, net_id> emit_magnitude4( netlist_builder& b, std::span<const net_id> x )
{
  auto const sign = x[3];
  bus_bits flipped;
  for ( auto n : x )
  {
    flipped.push_back( b.xor_( n, sign ) );
  }
  auto const mag = emit_ripple_adder( b, flipped, zeros( b, 4u ), sign ).sum;
  /* only -8 produces a magnitude with bit 3 set */
  auto const sat = mag[3];
  return { { b.or_( mag[0], sat ), b.or_( mag[1], sat ), b.or_( mag[2], sat ), b.const0() }, sat };
}

} // namespace detail

/*!
  \brief Signed 4x4 multiply by sign-magnitude wrapping of an unsigned core.

  Magnitudes go through the unsigned multiplier, the product is conditionally
  negated by (p ^ s) + s with s = sign(x) ^ sign(y). An operand of -8 is
  clamped to magnitude 7 and raises `saturated`.
*/
inline signed_product_nets emit_signed4x4( netlist_builder& b, std::span<const net_id> x, std::span<const net_id> y, multiplier_impl impl )
{
  if ( x.size() != 4u || y.size() != 4u )
  {
    throw std::invalid_argument( "signed multiplier takes 4-bit operands" );
  }
  auto const [mx, sx] = detail::emit_magnitude4( b, x );
  auto const [my, sy] = detail::emit_magnitude4( b, y );
  auto const mag = emit_unsigned4x4( b, mx, my, impl );

  auto const sign = b.xor_( x[3], y[3] );
  bus_bits flipped;
  for ( auto n : mag )
  {
    flipped.push_back( b.xor_( n, sign ) );
  }
  auto const p = emit_ripple_adder( b, flipped, zeros( b, 8u ), sign ).sum;
  return { p, b.or_( sx, sy ) };
}

/* standalone units */

namespace detail
{

template<typename Emit>
netlist build_binary_unit( std::string name, std::size_t width, Emit&& emit )
{
  netlist_builder b( std::move( name ) );
  auto const x = b.add_input( "a", width );
  auto const y = b.add_input( "b", width );
  auto const p = emit( b, x, y );
  b.add_output( "p", p );
  return b.finalize();
}

} // namespace detail

inline netlist build_vedic2x2()
{
  return detail::build_binary_unit( "vedic2x2", 2u, []( auto& b, auto const& x, auto const& y ) { return emit_vedic2x2( b, x, y ); } );
}

inline netlist build_vedic4x4()
{
  return detail::build_binary_unit( "vedic4x4", 4u, []( auto& b, auto const& x, auto const& y ) { return emit_vedic4x4( b, x, y ); } );
}

inline netlist build_array4x4()
{
  return detail::build_binary_unit( "array4x4", 4u, []( auto& b, auto const& x, auto const& y ) { return emit_array4x4( b, x, y ); } );
}

inline netlist build_unsigned4x4( multiplier_impl impl )
{
  return impl == multiplier_impl::vedic ? build_vedic4x4() : build_array4x4();
}

/*! \brief a, b (width), cin (1) -> sum (width), cout (1). */
inline netlist build_ripple_adder( std::size_t width )
{
  if ( width < 1u )
  {
    throw std::invalid_argument( "adder width must be >= 1" );
  }
  netlist_builder b( "adder" + std::to_string( width ) );
  auto const x = b.add_input( "a", width );
  auto const y = b.add_input( "b", width );
  auto const cin = b.add_input( "cin", 1u );
  auto const r = emit_ripple_adder( b, x, y, cin[0] );
  b.add_output( "sum", r.sum );
  b.add_output( "cout", { r.carry } );
  return b.finalize();
}

/*! \brief a, b (width) -> diff (width), borrow (1). */
inline netlist build_ripple_subtractor( std::size_t width )
{
  if ( width < 1u )
  {
    throw std::invalid_argument( "subtractor width must be >= 1" );
  }
  netlist_builder b( "subtractor" + std::to_string( width ) );
  auto const x = b.add_input( "a", width );
  auto const y = b.add_input( "b", width );
  auto const r = emit_ripple_subtractor( b, x, y );
  b.add_output( "diff", r.sum );
  b.add_output( "borrow", { r.carry } );
  return b.finalize();
}

/*! \brief a, b (4-bit signed) -> p (8-bit signed), sat (1). */
inline netlist build_signed_multiplier( multiplier_impl impl )
{
  netlist_builder b( "signed_mul_" + std::string( to_string( impl ) ) );
  auto const x = b.add_input( "a", 4u );
  auto const y = b.add_input( "b", 4u );
  auto const r = emit_signed4x4( b, x, y, impl );
  b.add_output( "p", r.product );
  b.add_output( "sat", { r.saturated } );
  return b.finalize();
}

struct signed_product
{
  int value;
  bool saturated;
};

/*! \brief Evaluates the signed multiplier netlist; a, b in [-8, 7]. */
inline signed_product signed_multiply_4x4( int a, int b, multiplier_impl impl )
{
  static const std::array<netlist, 2> units = { build_signed_multiplier( multiplier_impl::vedic ),
                                                build_signed_multiplier( multiplier_impl::array ) };
  auto const& unit = units[impl == multiplier_impl::vedic ? 0u : 1u];
  auto const out = unit.evaluate( { { "a", bit_vector::from_int( a, 4u, interpretation::twos_complement ) },
                                    { "b", bit_vector::from_int( b, 4u, interpretation::twos_complement ) } } );
  return { static_cast<int>( out.at( "p" ).to_signed() ), out.at( "sat" )[0] };
}

} // namespace vedic
