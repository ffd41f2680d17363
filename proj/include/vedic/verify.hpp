/*!
  \file verify.hpp
  \brief Exhaustive and randomized oracle suites for every unit

  Oracles are plain integer arithmetic and the exact DFT; each suite reports
  how many cases it checked and keeps the first few failures.
*/
#pragma once

#include "arith.hpp"
#include "fft.hpp"
#include "netlist.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vedic
{

struct suite_result
{
  explicit suite_result( std::string name = {} ) : unit( std::move( name ) ) {}

  std::string unit;
  std::size_t passed{ 0 };
  std::size_t total{ 0 };
  std::vector<std::string> failures;

  bool ok() const noexcept { return passed == total; }

  void record( bool pass, const std::string& what )
  {
    ++total;
    if ( pass )
    {
      ++passed;
    }
    else if ( failures.size() < 8u )
    {
      failures.push_back( what );
    }
  }
};

inline constexpr std::uint64_t default_seed = 0x5eed'f00d'2010ull;
inline constexpr std::size_t default_random_vectors = 1000u;

namespace detail
{

inline suite_result check_multiplier( const std::string& unit, const netlist& ntk, std::size_t width )
{
  suite_result r{ unit };
  auto const n = std::int64_t{ 1 } << width;
  for ( std::int64_t a = 0; a < n; ++a )
  {
    for ( std::int64_t b = 0; b < n; ++b )
    {
      auto const out = ntk.evaluate( { { "a", bit_vector::from_int( a, width ) }, { "b", bit_vector::from_int( b, width ) } } );
      auto const got = static_cast<std::int64_t>( out.at( "p" ).to_unsigned() );
      r.record( got == a * b, std::to_string( a ) + "*" + std::to_string( b ) + " = " + std::to_string( got ) );
    }
  }
  return r;
}

inline void check_adder_case( suite_result& r, const netlist& ntk, std::size_t w, std::uint64_t a, std::uint64_t b, std::uint64_t cin )
{
  auto const out = ntk.evaluate( { { "a", bit_vector::from_int( static_cast<std::int64_t>( a ), w ) },
                                   { "b", bit_vector::from_int( static_cast<std::int64_t>( b ), w ) },
                                   { "cin", bit_vector::from_int( static_cast<std::int64_t>( cin ), 1u ) } } );
  auto const full = a + b + cin;
  auto const mask = ( std::uint64_t{ 1 } << w ) - 1u;
  bool const ok = out.at( "sum" ).to_unsigned() == ( full & mask ) && out.at( "cout" ).to_unsigned() == ( full >> w );
  r.record( ok, "adder" + std::to_string( w ) + " " + std::to_string( a ) + "+" + std::to_string( b ) + "+" + std::to_string( cin ) );
}

inline void check_subtractor_case( suite_result& r, const netlist& ntk, std::size_t w, std::uint64_t a, std::uint64_t b )
{
  auto const out = ntk.evaluate( { { "a", bit_vector::from_int( static_cast<std::int64_t>( a ), w ) },
                                   { "b", bit_vector::from_int( static_cast<std::int64_t>( b ), w ) } } );
  auto const mask = ( std::uint64_t{ 1 } << w ) - 1u;
  bool const ok = out.at( "diff" ).to_unsigned() == ( ( a - b ) & mask ) && out.at( "borrow" ).to_unsigned() == ( a < b ? 1u : 0u );
  r.record( ok, "subtractor" + std::to_string( w ) + " " + std::to_string( a ) + "-" + std::to_string( b ) );
}

inline std::string show( std::span<const fixed_complex> v )
{
  std::string s = "[";
  for ( auto const& c : v )
  {
    s += "(" + std::to_string( c.re ) + "," + std::to_string( c.im ) + ")";
  }
  return s + "]";
}

} // namespace detail

inline suite_result verify_vedic2x2()
{
  return detail::check_multiplier( "vedic2x2", build_vedic2x2(), 2u );
}

inline suite_result verify_vedic4x4()
{
  return detail::check_multiplier( "vedic4x4", build_vedic4x4(), 4u );
}

inline suite_result verify_array4x4()
{
  return detail::check_multiplier( "array4x4", build_array4x4(), 4u );
}

/*! \brief Exhaustive at width 4, random vectors at widths 8 and 16. */
inline suite_result verify_adder( std::uint64_t seed = default_seed, std::size_t vectors = default_random_vectors )
{
  suite_result r{ "adder" };
  auto const a4 = build_ripple_adder( 4u );
  for ( std::uint64_t a = 0; a < 16u; ++a )
  {
    for ( std::uint64_t b = 0; b < 16u; ++b )
    {
      for ( std::uint64_t c = 0; c < 2u; ++c )
      {
        detail::check_adder_case( r, a4, 4u, a, b, c );
      }
    }
  }
  std::mt19937_64 rng( seed );
  for ( std::size_t w : { 8u, 16u } )
  {
    auto const ntk = build_ripple_adder( w );
    std::uniform_int_distribution<std::uint64_t> val( 0u, ( std::uint64_t{ 1 } << w ) - 1u );
    std::uniform_int_distribution<std::uint64_t> bit( 0u, 1u );
    for ( std::size_t i = 0; i < vectors; ++i )
    {
      auto const a = val( rng );
      auto const b = val( rng );
      detail::check_adder_case( r, ntk, w, a, b, bit( rng ) );
    }
  }
  return r;
}

inline suite_result verify_subtractor( std::uint64_t seed = default_seed, std::size_t vectors = default_random_vectors )
{
  suite_result r{ "subtractor" };
  auto const s4 = build_ripple_subtractor( 4u );
  for ( std::uint64_t a = 0; a < 16u; ++a )
  {
    for ( std::uint64_t b = 0; b < 16u; ++b )
    {
      detail::check_subtractor_case( r, s4, 4u, a, b );
    }
  }
  std::mt19937_64 rng( seed + 1u );
  for ( std::size_t w : { 8u, 16u } )
  {
    auto const ntk = build_ripple_subtractor( w );
    std::uniform_int_distribution<std::uint64_t> val( 0u, ( std::uint64_t{ 1 } << w ) - 1u );
    for ( std::size_t i = 0; i < vectors; ++i )
    {
      auto const a = val( rng );
      auto const b = val( rng );
      detail::check_subtractor_case( r, ntk, w, a, b );
    }
  }
  return r;
}

/*! \brief `count` vectors of 4 samples, components uniform in the signed `width`-bit range. */
inline std::vector<std::vector<fixed_complex>> random_sample_vectors( std::size_t count, unsigned width = 4u,
                                                                      std::uint64_t seed = default_seed )
{
  std::mt19937_64 rng( seed );
  std::uniform_int_distribution<std::int64_t> comp( bit_vector::min_value( width, interpretation::twos_complement ),
                                                    bit_vector::max_value( width, interpretation::twos_complement ) );
  std::vector<std::vector<fixed_complex>> out( count );
  for ( auto& v : out )
  {
    for ( std::size_t i = 0; i < 4u; ++i )
    {
      auto const re = comp( rng );
      auto const im = comp( rng );
      v.push_back( { re, im } );
    }
  }
  return out;
}

/*! \brief Impulse, DC, and the real and imaginary unit basis vectors. */
inline std::vector<std::vector<fixed_complex>> basis_sample_vectors()
{
  std::vector<std::vector<fixed_complex>> out;
  out.push_back( { { 1, 0 }, { 1, 0 }, { 1, 0 }, { 1, 0 } } );
  for ( std::size_t k = 0; k < 4u; ++k )
  {
    std::vector<fixed_complex> re( 4u ), im( 4u );
    re[k] = { 1, 0 };
    im[k] = { 0, 1 };
    out.push_back( re );
    out.push_back( im );
  }
  return out;
}

/*! \brief Expected output of the reconfigurable FFT: full DFT, or 2-point DFT of x0, x1 with zeros above. */
inline std::vector<fixed_complex> expected_spectrum( std::span<const fixed_complex> x, unsigned select )
{
  if ( select == 4u )
  {
    return dft_exact( x.first( 4u ) );
  }
  auto y = dft_exact( x.first( 2u ) );
  y.resize( 4u );
  return y;
}

/*! \brief Largest |component| over a sample vector. */
inline std::int64_t max_component( std::span<const fixed_complex> x )
{
  std::int64_t m = 0;
  for ( auto const& c : x )
  {
    m = std::max( { m, c.re < 0 ? -c.re : c.re, c.im < 0 ? -c.im : c.im } );
  }
  return m;
}

/*! \brief True when every component error is within N * 2^-F * max|x|. */
inline bool within_quantization_bound( std::span<const fixed_complex> got, std::span<const fixed_complex> want,
                                       std::span<const fixed_complex> x, unsigned n, unsigned frac_bits )
{
  /* compare |err| * 2^F <= N * max|x| to stay in integers */
  auto const limit = static_cast<std::int64_t>( n ) * max_component( x );
  for ( std::size_t k = 0; k < got.size(); ++k )
  {
    auto const dre = got[k].re - want[k].re;
    auto const dim = got[k].im - want[k].im;
    if ( ( ( dre < 0 ? -dre : dre ) << frac_bits ) > limit || ( ( dim < 0 ? -dim : dim ) << frac_bits ) > limit )
    {
      return false;
    }
  }
  return true;
}

/*!
  \brief Exact-mode oracle sweep for select 4 and 2, plus the quantized-mode
         (F = 3) error bound over the same random vectors.
*/
inline suite_result verify_fft( multiplier_impl impl = multiplier_impl::vedic, std::uint64_t seed = default_seed,
                                std::size_t vectors = default_random_vectors )
{
  suite_result r{ "fft" };
  fft_engine const exact( { 4u, twiddle_mode::exact(), 4u, impl } );
  fft_engine const quant( { 4u, twiddle_mode::fixed_point( 3u ), 4u, impl } );

  auto sweep = basis_sample_vectors();
  auto const random = random_sample_vectors( vectors, 4u, seed );
  sweep.insert( sweep.end(), random.begin(), random.end() );

  for ( unsigned select : { 4u, 2u } )
  {
    for ( auto const& x : sweep )
    {
      auto const got = exact.run( select, x ).spectrum;
      r.record( got == expected_spectrum( x, select ), "exact select=" + std::to_string( select ) + " " + detail::show( x ) );
    }
  }
  for ( auto const& x : random )
  {
    auto const got = quant.run( 4u, x ).spectrum;
    r.record( within_quantization_bound( got, dft_exact( x ), x, 4u, 3u ), "quantized F=3 " + detail::show( x ) );
  }
  return r;
}

inline std::vector<std::string> verify_unit_names()
{
  return { "vedic2x2", "vedic4x4", "array4x4", "adder", "subtractor", "fft", "all" };
}

/*! \brief Runs one named suite, or every suite for "all"; throws std::invalid_argument for unknown names. */
inline std::vector<suite_result> run_verification( std::string_view unit )
{
  std::vector<suite_result> out;
  bool const all = unit == "all";
  if ( all || unit == "vedic2x2" )
  {
    out.push_back( verify_vedic2x2() );
  }
  if ( all || unit == "vedic4x4" )
  {
    out.push_back( verify_vedic4x4() );
  }
  if ( all || unit == "array4x4" )
  {
    out.push_back( verify_array4x4() );
  }
  if ( all || unit == "adder" )
  {
    out.push_back( verify_adder() );
  }
  if ( all || unit == "subtractor" )
  {
    out.push_back( verify_subtractor() );
  }
  if ( all || unit == "fft" )
  {
    out.push_back( verify_fft() );
  }
  if ( out.empty() )
  {
    throw std::invalid_argument( "unknown unit '" + std::string( unit ) + "'" );
  }
  return out;
}

} // namespace vedic
