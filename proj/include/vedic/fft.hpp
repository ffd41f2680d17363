/*!
  \file fft.hpp
  \brief Reconfigurable 2/4-point FFT datapath built from the arithmetic units, plus DFT references

  The 4-point transform is radix-2 decimation in time: stage one runs
  butterflies on (x0, x2) and (x1, x3), stage two combines them with the
  twiddle W4^1 = -j on the odd branch. Every add/subtract stage grows the word
  by one bit, so with exact twiddles the datapath never rounds.

  The reconfigurable netlist holds both the 2-point and the 4-point datapath
  and a 1-bit `select` input (0: 2-point, 1: 4-point) that drives the output
  multiplexers. In 2-point mode X2 and X3 read zero.
*/
#pragma once

#include "arith.hpp"
#include "netlist.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace vedic
{

struct fixed_complex
{
  std::int64_t re{ 0 };
  std::int64_t im{ 0 };

  friend bool operator==( const fixed_complex&, const fixed_complex& ) = default;
  friend fixed_complex operator+( fixed_complex a, fixed_complex b ) { return { a.re + b.re, a.im + b.im }; }
  friend fixed_complex operator-( fixed_complex a, fixed_complex b ) { return { a.re - b.re, a.im - b.im }; }
  friend fixed_complex operator*( fixed_complex a, fixed_complex b )
  {
    return { a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re };
  }

  std::int64_t norm() const noexcept { return re * re + im * im; }
  fixed_complex conj() const noexcept { return { re, -im }; }

  bool fits( std::size_t width ) const noexcept
  {
    auto const lo = bit_vector::min_value( width, interpretation::twos_complement );
    auto const hi = bit_vector::max_value( width, interpretation::twos_complement );
    return re >= lo && re <= hi && im >= lo && im <= hi;
  }
};

struct twiddle_mode
{
  bool quantized{ false };
  unsigned frac_bits{ 0 }; // F in Q1.F, quantized mode only

  static twiddle_mode exact() noexcept { return {}; }
  static twiddle_mode fixed_point( unsigned f ) noexcept { return { true, f }; }

  friend bool operator==( const twiddle_mode&, const twiddle_mode& ) = default;
};

struct fft_config
{
  unsigned select{ 4 }; // transform length, 2 or 4
  twiddle_mode twiddle{};
  unsigned input_width{ 4 };
  multiplier_impl multiplier{ multiplier_impl::vedic };

  /*! \brief Throws std::invalid_argument for an unusable configuration. */
  void validate() const
  {
    if ( select != 2u && select != 4u )
    {
      throw std::invalid_argument( "select must be 2 or 4, got " + std::to_string( select ) );
    }
    if ( input_width < 2u || input_width > 24u )
    {
      throw std::invalid_argument( "input width must be in [2, 24]" );
    }
    if ( twiddle.quantized )
    {
      if ( input_width != 4u )
      {
        throw std::invalid_argument( "quantized twiddles need 4-bit inputs (the multiplier is 4x4)" );
      }
      if ( twiddle.frac_bits < 1u || twiddle.frac_bits > 3u )
      {
        throw std::invalid_argument( "quantized twiddles need 1 <= F <= 3" );
      }
    }
  }

  /*! \brief Same hardware: everything except the run-time select line. */
  bool same_hardware( const fft_config& o ) const noexcept
  {
    return twiddle == o.twiddle && input_width == o.input_width && multiplier == o.multiplier;
  }
};

/*!
  \brief W_N^k, either exactly (one of 1, -j, -1, j) or as a Q1.F coefficient pair.

  Quantized coefficients round half to even from (cos, -sin)(2*pi*k/N) and are
  stored as 4-bit two's complement, so +1.0 at F = 3 clamps to 7/8.
*/
struct twiddle
{
  bool exact{ true };
  fixed_complex value{ 1, 0 }; // exact: the unit itself; quantized: integer coefficients
  unsigned frac_bits{ 0 };
  bool clamped{ false };

  friend bool operator==( const twiddle&, const twiddle& ) = default;
};

inline twiddle exact_twiddle( unsigned k, unsigned n )
{
  if ( n != 1u && n != 2u && n != 4u )
  {
    throw std::invalid_argument( "exact twiddles exist only for N in {1, 2, 4}" );
  }
  static constexpr std::array<fixed_complex, 4> quarter = { { { 1, 0 }, { 0, -1 }, { -1, 0 }, { 0, 1 } } };
  return { true, quarter[( k * ( 4u / n ) ) % 4u], 0u, false };
}

inline twiddle quantized_twiddle( unsigned k, unsigned n, unsigned frac_bits )
{
  if ( n == 0u || frac_bits < 1u || frac_bits > 3u )
  {
    throw std::invalid_argument( "quantized twiddle needs N >= 1 and 1 <= F <= 3" );
  }
  auto const angle = 2.0 * std::numbers::pi * static_cast<double>( k % n ) / static_cast<double>( n );
  auto const scale = std::ldexp( 1.0, static_cast<int>( frac_bits ) );
  twiddle t{ false, {}, frac_bits, false };
  auto quantize = [&]( double v ) {
    /* default rounding mode is round-half-to-even */
    auto q = static_cast<std::int64_t>( std::nearbyint( v * scale ) );
    if ( q > 7 )
    {
      q = 7;
      t.clamped = true;
    }
    if ( q < -8 )
    {
      q = -8;
      t.clamped = true;
    }
    return q;
  };
  t.value = { quantize( std::cos( angle ) ), quantize( -std::sin( angle ) ) };
  return t;
}

/*! \brief Exact DFT in Gaussian integers for N in {1, 2, 4}. */
inline std::vector<fixed_complex> dft_exact( std::span<const fixed_complex> x )
{
  auto const n = static_cast<unsigned>( x.size() );
  if ( n == 0u )
  {
    throw std::invalid_argument( "empty DFT input" );
  }
  if ( n != 1u && n != 2u && n != 4u )
  {
    throw std::invalid_argument( "exact DFT supports N in {1, 2, 4}; use dft_reference" );
  }
  std::vector<fixed_complex> out( n );
  for ( unsigned k = 0; k < n; ++k )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      out[k] = out[k] + x[i] * exact_twiddle( ( i * k ) % n, n ).value;
    }
  }
  return out;
}

/*!
  \brief Double-precision DFT for any N.

  Each output accumulates N products with a twiddle rounded once, so the
  absolute error is below roughly 2 * N * eps * sum |x(n)|.
*/
inline std::vector<std::complex<double>> dft_reference( std::span<const std::complex<double>> x )
{
  auto const n = x.size();
  if ( n == 0u )
  {
    throw std::invalid_argument( "empty DFT input" );
  }
  std::vector<std::complex<double>> out( n );
  for ( std::size_t k = 0; k < n; ++k )
  {
    for ( std::size_t i = 0; i < n; ++i )
    {
      auto const angle = -2.0 * std::numbers::pi * static_cast<double>( ( i * k ) % n ) / static_cast<double>( n );
      out[k] += x[i] * std::polar( 1.0, angle );
    }
  }
  return out;
}

/* netlist construction */

struct complex_bus
{
  bus_bits re;
  bus_bits im;
};

inline complex_bus add_complex_input( netlist_builder& b, const std::string& prefix, std::size_t width )
{
  return { b.add_input( prefix + "_re", width ), b.add_input( prefix + "_im", width ) };
}

inline void add_complex_output( netlist_builder& b, const std::string& prefix, const complex_bus& c )
{
  b.add_output( prefix + "_re", c.re );
  b.add_output( prefix + "_im", c.im );
}

/*! \brief (x0 + x1, x0 - x1) at `width` bits. */
inline std::pair<complex_bus, complex_bus> emit_butterfly( netlist_builder& b, const complex_bus& x0, const complex_bus& x1, std::size_t width )
{
  return { { emit_signed_add( b, x0.re, x1.re, width ), emit_signed_add( b, x0.im, x1.im, width ) },
           { emit_signed_sub( b, x0.re, x1.re, width ), emit_signed_sub( b, x0.im, x1.im, width ) } };
}

/*! \brief Multiplication by 1, -1, j or -j: wire swaps and structural negation. */
inline complex_bus emit_exact_rotation( netlist_builder& b, const complex_bus& x, fixed_complex unit, std::size_t width )
{
  if ( unit == fixed_complex{ 1, 0 } )
  {
    return { resize_signed( x.re, width ), resize_signed( x.im, width ) };
  }
  if ( unit == fixed_complex{ -1, 0 } )
  {
    return { emit_negate( b, x.re, width ), emit_negate( b, x.im, width ) };
  }
  if ( unit == fixed_complex{ 0, -1 } )
  {
    return { resize_signed( x.im, width ), emit_negate( b, x.re, width ) };
  }
  if ( unit == fixed_complex{ 0, 1 } )
  {
    return { emit_negate( b, x.im, width ), resize_signed( x.re, width ) };
  }
  throw std::invalid_argument( "not an exact rotation" );
}

struct complex_product_nets
{
  complex_bus full;   // exact integer product, 9 bits per component
  complex_bus scaled; // full >> F (arithmetic, rounds toward -inf), 9 - F bits
  net_id saturated;
};

/*!
  \brief (a + jb)(c + jd) = (ac - bd) + j(ad + bc) with four signed 4x4 multipliers,
         one subtractor and one adder; (c, d) are hard-wired constants.
*/
inline complex_product_nets emit_complex_multiply( netlist_builder& b, const complex_bus& x, const twiddle& w, multiplier_impl impl )
{
  if ( x.re.size() != 4u || x.im.size() != 4u )
  {
    throw std::invalid_argument( "complex multiplier takes 4-bit components" );
  }
  auto constant = [&]( std::int64_t v ) {
    auto const bv = bit_vector::from_int( v, 4u, interpretation::twos_complement );
    bus_bits r;
    for ( std::size_t i = 0; i < 4u; ++i )
    {
      r.push_back( b.constant( bv[i] ) );
    }
    return r;
  };
  auto const c = constant( w.value.re );
  auto const d = constant( w.value.im );

  auto const ac = emit_signed4x4( b, x.re, c, impl );
  auto const bd = emit_signed4x4( b, x.im, d, impl );
  auto const ad = emit_signed4x4( b, x.re, d, impl );
  auto const bc = emit_signed4x4( b, x.im, c, impl );

  complex_product_nets r;
  r.full.re = emit_signed_sub( b, ac.product, bd.product, 9u );
  r.full.im = emit_signed_add( b, ad.product, bc.product, 9u );
  r.scaled.re.assign( r.full.re.begin() + w.frac_bits, r.full.re.end() );
  r.scaled.im.assign( r.full.im.begin() + w.frac_bits, r.full.im.end() );
  r.saturated = b.or_( b.or_( ac.saturated, bd.saturated ), b.or_( ad.saturated, bc.saturated ) );
  return r;
}

/*!
  \brief Standalone twiddle multiplier.

  Exact twiddles: inputs re, im (width) -> re, im (width + 1).
  Quantized twiddles (width must be 4): outputs re, im scaled by 2^-F,
  re_full, im_full (9 bits, unscaled) and sat.
*/
inline netlist complex_multiply_unit( std::size_t width, const twiddle& w, multiplier_impl impl = multiplier_impl::vedic )
{
  netlist_builder b( w.exact ? "rotate" : "complex_mul_" + std::string( to_string( impl ) ) );
  if ( w.exact )
  {
    if ( width < 2u )
    {
      throw std::invalid_argument( "width must be >= 2" );
    }
    auto const x = add_complex_input( b, "x", width );
    auto const y = emit_exact_rotation( b, x, w.value, width + 1u );
    b.add_output( "re", y.re );
    b.add_output( "im", y.im );
    return b.finalize();
  }
  if ( width != 4u )
  {
    throw std::invalid_argument( "the quantized complex multiplier is 4x4; width must be 4" );
  }
  if ( w.frac_bits < 1u || w.frac_bits > 3u )
  {
    throw std::invalid_argument( "twiddle must be quantized with 1 <= F <= 3" );
  }
  auto const x = add_complex_input( b, "x", width );
  auto const r = emit_complex_multiply( b, x, w, impl );
  b.add_output( "re", r.scaled.re );
  b.add_output( "im", r.scaled.im );
  b.add_output( "re_full", r.full.re );
  b.add_output( "im_full", r.full.im );
  b.add_output( "sat", { r.saturated } );
  return b.finalize();
}

/*! \brief 2-point transform at `width` + 1 output bits. */
inline std::array<complex_bus, 2> emit_fft2( netlist_builder& b, std::span<const complex_bus> x, std::size_t width )
{
  auto [y0, y1] = emit_butterfly( b, x[0], x[1], width + 1u );
  return { y0, y1 };
}

/*!
  \brief 4-point transform at `width` + 2 output bits.

  In quantized mode the -j rotation of the odd branch (x1 - x3) is applied as
  Q(W)x1 - Q(W)x3, so each multiplier sees a 4-bit input sample.
*/
inline std::array<complex_bus, 4> emit_fft4( netlist_builder& b, std::span<const complex_bus> x, std::size_t width,
                                             const twiddle_mode& mode, multiplier_impl impl )
{
  auto const out_w = width + 2u;
  auto const [e0, e1] = emit_butterfly( b, x[0], x[2], width + 1u );
  auto const [o0, o1] = emit_butterfly( b, x[1], x[3], width + 1u );

  complex_bus t;
  if ( !mode.quantized )
  {
    t = emit_exact_rotation( b, o1, exact_twiddle( 1u, 4u ).value, out_w );
  }
  else
  {
    auto const w = quantized_twiddle( 1u, 4u, mode.frac_bits );
    if ( w.value == fixed_complex{} )
    {
      throw std::invalid_argument( "twiddle quantizes to zero at F = " + std::to_string( mode.frac_bits ) );
    }
    auto const q1 = emit_complex_multiply( b, x[1], w, impl );
    auto const q3 = emit_complex_multiply( b, x[3], w, impl );
    /* |Q(W)x| <= 7 per component for W = -j, so the difference fits out_w bits */
    auto const tw = std::max<std::size_t>( q1.scaled.re.size(), out_w );
    t.re = resize_signed( emit_signed_sub( b, q1.scaled.re, q3.scaled.re, tw ), out_w );
    t.im = resize_signed( emit_signed_sub( b, q1.scaled.im, q3.scaled.im, tw ), out_w );
  }

  auto const [y0, y2] = emit_butterfly( b, e0, o0, out_w );
  auto const [y1, y3] = emit_butterfly( b, e1, t, out_w );
  return { y0, y1, y2, y3 };
}

/*! \brief x0..x1 (re/im, width) -> X0..X1 (width + 1). */
inline netlist build_butterfly2( std::size_t width )
{
  if ( width < 2u )
  {
    throw std::invalid_argument( "width must be >= 2" );
  }
  netlist_builder b( "butterfly2" );
  std::array<complex_bus, 2> x = { add_complex_input( b, "x0", width ), add_complex_input( b, "x1", width ) };
  auto const y = emit_fft2( b, x, width );
  add_complex_output( b, "X0", y[0] );
  add_complex_output( b, "X1", y[1] );
  return b.finalize();
}

/*! \brief x0..x3 (re/im, width) -> X0..X3 (width + 2). */
inline netlist build_fft4( std::size_t width, const twiddle_mode& mode, multiplier_impl impl = multiplier_impl::vedic )
{
  fft_config{ 4u, mode, static_cast<unsigned>( width ), impl }.validate();
  netlist_builder b( "fft4" );
  std::array<complex_bus, 4> x;
  for ( std::size_t i = 0; i < 4u; ++i )
  {
    x[i] = add_complex_input( b, "x" + std::to_string( i ), width );
  }
  auto const y = emit_fft4( b, x, width, mode, impl );
  for ( std::size_t i = 0; i < 4u; ++i )
  {
    add_complex_output( b, "X" + std::to_string( i ), y[i] );
  }
  return b.finalize();
}

/*!
  \brief Both datapaths in one netlist with a `select` input (0: 2-point, 1: 4-point).

  Output bits are picked by AND/OR/NOT 2:1 multiplexers; X2 and X3 are gated
  to zero in 2-point mode. `config.select` is ignored here since it is a
  run-time input of the circuit.
*/
inline netlist build_reconfigurable_fft( const fft_config& config )
{
  config.validate();
  auto const width = std::size_t{ config.input_width };
  auto const out_w = width + 2u;

  netlist_builder b( "fft_reconfigurable" );
  std::array<complex_bus, 4> x;
  for ( std::size_t i = 0; i < 4u; ++i )
  {
    x[i] = add_complex_input( b, "x" + std::to_string( i ), width );
  }
  auto const sel = b.add_input( "select", 1u )[0];
  auto const nsel = b.not_( sel );

  auto const two = emit_fft2( b, x, width );
  auto const four = emit_fft4( b, x, width, config.twiddle, config.multiplier );

  auto mux = [&]( const bus_bits& when_four, const bus_bits& when_two ) {
    auto const lo = resize_signed( when_two, out_w );
    bus_bits r;
    for ( std::size_t i = 0; i < out_w; ++i )
    {
      r.push_back( b.or_( b.and_( sel, when_four[i] ), b.and_( nsel, lo[i] ) ) );
    }
    return r;
  };
  auto gate = [&]( const bus_bits& when_four ) {
    bus_bits r;
    for ( auto n : when_four )
    {
      r.push_back( b.and_( sel, n ) );
    }
    return r;
  };

  for ( std::size_t i = 0; i < 4u; ++i )
  {
    complex_bus y;
    if ( i < 2u )
    {
      y = { mux( four[i].re, two[i].re ), mux( four[i].im, two[i].im ) };
    }
    else
    {
      y = { gate( four[i].re ), gate( four[i].im ) };
    }
    add_complex_output( b, "X" + std::to_string( i ), y );
  }
  return b.finalize();
}

/* behavioral front door */

struct fft_result
{
  std::vector<fixed_complex> spectrum; // always 4 entries
  unsigned output_width{ 0 };
  int scale_log2{ 0 };        // value = integer * 2^scale_log2
  unsigned twiddle_shift{ 0 }; // bits dropped after each twiddle product (floor)
  unsigned select{ 4 };
};

/*! \brief Holds one reconfigurable netlist and evaluates it for either transform length. */
class fft_engine
{
public:
  explicit fft_engine( const fft_config& hardware ) : config_( hardware ), circuit_( build_reconfigurable_fft( hardware ) ) {}

  const netlist& circuit() const noexcept { return circuit_; }
  const fft_config& config() const noexcept { return config_; }

  /*!
    \brief Runs the transform; `select` is 2 or 4.

    Takes 4 samples, or 2 or 4 when select is 2. Throws std::invalid_argument on
    a bad count and std::out_of_range when a component does not fit input_width.
  */
  fft_result run( unsigned select, std::span<const fixed_complex> samples ) const
  {
    if ( select != 2u && select != 4u )
    {
      throw std::invalid_argument( "select must be 2 or 4, got " + std::to_string( select ) );
    }
    if ( samples.size() != 4u && !( select == 2u && samples.size() == 2u ) )
    {
      throw std::invalid_argument( "expected " + std::string( select == 2u ? "2 or 4" : "4" ) + " samples, got " +
                                   std::to_string( samples.size() ) );
    }
    auto const w = config_.input_width;
    assignment in;
    for ( std::size_t i = 0; i < 4u; ++i )
    {
      auto const s = i < samples.size() ? samples[i] : fixed_complex{};
      if ( !s.fits( w ) )
      {
        throw std::out_of_range( "sample " + std::to_string( i ) + " (" + std::to_string( s.re ) + ", " +
                                 std::to_string( s.im ) + ") does not fit " + std::to_string( w ) + "-bit components" );
      }
      in.emplace( "x" + std::to_string( i ) + "_re", bit_vector::from_int( s.re, w, interpretation::twos_complement ) );
      in.emplace( "x" + std::to_string( i ) + "_im", bit_vector::from_int( s.im, w, interpretation::twos_complement ) );
    }
    in.emplace( "select", bit_vector::from_int( select == 4u ? 1 : 0, 1u ) );

    auto const out = circuit_.evaluate( in );
    fft_result r;
    r.output_width = w + 2u;
    r.twiddle_shift = config_.twiddle.quantized ? config_.twiddle.frac_bits : 0u;
    r.select = select;
    for ( std::size_t i = 0; i < 4u; ++i )
    {
      auto const p = "X" + std::to_string( i );
      r.spectrum.push_back( { out.at( p + "_re" ).to_signed(), out.at( p + "_im" ).to_signed() } );
    }
    return r;
  }

private:
  fft_config config_;
  netlist circuit_;
};

/*! \brief Builds (once per hardware configuration) and runs the reconfigurable FFT. */
inline fft_result run_fft( const fft_config& config, std::span<const fixed_complex> samples )
{
  config.validate();
  using key_t = std::tuple<unsigned, bool, unsigned, multiplier_impl>;
  static std::mutex mtx;
  static std::map<key_t, std::shared_ptr<const fft_engine>> engines;

  key_t const key{ config.input_width, config.twiddle.quantized, config.twiddle.frac_bits, config.multiplier };
  std::shared_ptr<const fft_engine> engine;
  {
    std::lock_guard lock( mtx );
    auto& slot = engines[key];
    if ( !slot )
    {
      slot = std::make_shared<const fft_engine>( config );
    }
    engine = slot;
  }
  return engine->run( config.select, samples );
}

} // namespace vedic
