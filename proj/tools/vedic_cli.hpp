/*!
  \file vedic_cli.hpp
  \brief Command-line front end: mul, fft, verify, dump, report

  Exit codes: 0 success, 1 verification failure, 2 usage error. Results go to
  `out` only after the command succeeded; diagnostics go to `err`.
*/
#pragma once

#include <vedic/vedic.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace vedic::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t parse_int( const std::string& s, const std::string& what )
{
  std::size_t pos = 0;
  long long v = 0;
  try
  {
    v = std::stoll( s, &pos );
  }
  catch ( const std::exception& )
  {
    throw usage_error( what + " must be an integer, got '" + s + "'" );
  }
  if ( pos != s.size() )
  {
    throw usage_error( what + " must be an integer, got '" + s + "'" );
  }
  return v;
}

inline multiplier_impl parse_impl( const std::string& s )
{
  auto const impl = multiplier_impl_from_string( s );
  if ( !impl )
  {
    throw usage_error( "--impl must be vedic or array, got '" + s + "'" );
  }
  return *impl;
}

inline twiddle_mode parse_twiddle( const std::string& s )
{
  if ( s == "exact" )
  {
    return twiddle_mode::exact();
  }
  if ( s.size() >= 2u && s[0] == 'q' )
  {
    auto const f = parse_int( s.substr( 1 ), "--twiddle fraction bits" );
    if ( f >= 1 && f <= 3 )
    {
      return twiddle_mode::fixed_point( static_cast<unsigned>( f ) );
    }
  }
  throw usage_error( "--twiddle must be exact, q1, q2 or q3, got '" + s + "'" );
}

/*! \brief Builds a unit by its dump name: vedic2x2, vedic4x4, array4x4, adder<W>, subtractor<W>, ... */
inline std::optional<netlist> unit_by_name( const std::string& name )
{
  auto width_suffix = [&]( std::string_view prefix ) -> std::optional<std::size_t> {
    if ( name.rfind( prefix, 0 ) != 0u || name.size() == prefix.size() )
    {
      return std::nullopt;
    }
    auto const digits = name.substr( prefix.size() );
    if ( digits.find_first_not_of( "0123456789" ) != std::string::npos || digits.size() > 2u )
    {
      return std::nullopt;
    }
    auto const w = std::stoul( digits );
    return w >= 1u && w <= 62u ? std::optional<std::size_t>( w ) : std::nullopt;
  };

  if ( name == "vedic2x2" )
  {
    return build_vedic2x2();
  }
  if ( name == "vedic4x4" )
  {
    return build_vedic4x4();
  }
  if ( name == "array4x4" )
  {
    return build_array4x4();
  }
  if ( name == "signed_mul_vedic" )
  {
    return build_signed_multiplier( multiplier_impl::vedic );
  }
  if ( name == "signed_mul_array" )
  {
    return build_signed_multiplier( multiplier_impl::array );
  }
  if ( name == "butterfly2" )
  {
    return build_butterfly2( 4u );
  }
  if ( name == "fft4" )
  {
    return build_fft4( 4u, twiddle_mode::exact() );
  }
  if ( name == "fft_reconfigurable" )
  {
    return build_reconfigurable_fft( fft_config{} );
  }
  if ( auto w = width_suffix( "adder" ) )
  {
    return build_ripple_adder( *w );
  }
  if ( auto w = width_suffix( "subtractor" ) )
  {
    return build_ripple_subtractor( *w );
  }
  return std::nullopt;
}

struct options
{
  /* mul */
  std::string a, b, impl = "vedic";
  bool is_signed = false, trace = false, decimal = false;
  /* fft */
  std::string input, samples, twiddle = "exact";
  int select = 4;
  /* verify, dump, report */
  std::string unit = "all", dump_unit, out_path, format = "text";
};

inline void cmd_mul( const options& o, std::ostream& out )
{
  if ( o.decimal )
  {
    urdhva_trace t;
    try
    {
      t = urdhva_multiply( o.a, o.b, 10u );
    }
    catch ( const std::invalid_argument& e )
    {
      throw usage_error( e.what() );
    }
    if ( o.trace )
    {
      out << "digit_line " << format_line( t.digit_line, 10u ) << '\n';
      out << "carry_line " << format_line( t.carry_line, 10u ) << '\n';
      out << "product " << format_digits( t.product ) << '\n';
    }
    else
    {
      out << format_digits( t.product ) << '\n';
    }
    return;
  }

  auto const impl = parse_impl( o.impl );
  auto const a = parse_int( o.a, "--a" );
  auto const b = parse_int( o.b, "--b" );
  auto const lo = o.is_signed ? -8 : 0;
  auto const hi = o.is_signed ? 7 : 15;
  if ( a < lo || a > hi || b < lo || b > hi )
  {
    throw usage_error( "operands must be in [" + std::to_string( lo ) + ", " + std::to_string( hi ) + "]" );
  }

  if ( o.trace )
  {
    /* the signed path multiplies magnitudes, with |-8| clamped to 7 */
    auto const magnitude = [&]( std::int64_t v ) {
      return bit_vector::from_int( o.is_signed ? std::min<std::int64_t>( v < 0 ? -v : v, 7 ) : v, 4u ).to_string();
    };
    auto const t = urdhva_multiply( magnitude( a ), magnitude( b ), 2u );
    out << "operands " << magnitude( a ) << " x " << magnitude( b ) << '\n';
    out << "digit_line " << format_line( t.digit_line, 2u ) << '\n';
    out << "carry_line " << format_line( t.carry_line, 2u ) << '\n';
  }

  if ( o.is_signed )
  {
    auto const p = signed_multiply_4x4( static_cast<int>( a ), static_cast<int>( b ), impl );
    out << ( o.trace ? "product " : "" ) << p.value << '\n';
    if ( p.saturated )
    {
      out << "saturated\n";
    }
  }
  else
  {
    auto const unit = build_unsigned4x4( impl );
    auto const r = unit.evaluate( { { "a", bit_vector::from_int( a, 4u ) }, { "b", bit_vector::from_int( b, 4u ) } } );
    out << ( o.trace ? "product " : "" ) << r.at( "p" ).to_unsigned() << '\n';
  }
}

inline void cmd_fft( const options& o, std::ostream& out )
{
  if ( o.input.empty() == o.samples.empty() )
  {
    throw usage_error( "give exactly one of --input or --samples" );
  }
  sample_set s;
  try
  {
    if ( !o.input.empty() )
    {
      std::ifstream is( o.input );
      if ( !is )
      {
        throw usage_error( "cannot read " + o.input );
      }
      std::stringstream buf;
      buf << is.rdbuf();
      s = parse_sample_document( buf.str() );
    }
    else
    {
      s.samples = parse_inline_samples( o.samples );
    }
  }
  catch ( const format_error& e )
  {
    throw usage_error( e.what() );
  }

  fft_config cfg{ static_cast<unsigned>( o.select ), parse_twiddle( o.twiddle ), s.width, parse_impl( o.impl ) };
  try
  {
    cfg.validate();
    out << spectrum_document( run_fft( cfg, s.samples ) ) << '\n';
  }
  catch ( const std::logic_error& e )
  {
    /* invalid_argument and out_of_range: bad config, sample count or range */
    throw usage_error( e.what() );
  }
}

inline int cmd_verify( const options& o, std::ostream& out )
{
  std::vector<suite_result> results;
  try
  {
    results = run_verification( o.unit );
  }
  catch ( const std::invalid_argument& e )
  {
    throw usage_error( e.what() );
  }
  std::size_t passed = 0, total = 0;
  for ( auto const& r : results )
  {
    out << r.unit << ": " << r.passed << "/" << r.total << ( r.ok() ? " pass" : " FAIL" ) << '\n';
    for ( auto const& f : r.failures )
    {
      out << "  failed: " << f << '\n';
    }
    passed += r.passed;
    total += r.total;
  }
  if ( results.size() > 1u )
  {
    out << "total: " << passed << "/" << total << ( passed == total ? " pass" : " FAIL" ) << '\n';
  }
  return passed == total ? exit_ok : exit_failed;
}

inline void cmd_dump( const options& o, std::ostream& out )
{
  auto const unit = unit_by_name( o.dump_unit );
  if ( !unit )
  {
    throw usage_error( "unknown unit '" + o.dump_unit + "'" );
  }
  auto const text = dump_netlist( *unit );
  if ( o.out_path.empty() )
  {
    out << text;
    return;
  }
  std::ofstream os( o.out_path, std::ios::binary );
  if ( !os || !( os << text ) || !os.flush() )
  {
    throw usage_error( "cannot write " + o.out_path );
  }
}

inline void cmd_report( const options& o, std::ostream& out )
{
  auto const format = report_format_from_string( o.format );
  if ( !format )
  {
    throw usage_error( "--format must be text, csv or json, got '" + o.format + "'" );
  }
  out << render( compare_fft_variants(), *format );
}

inline int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Gate-level Vedic multipliers and reconfigurable 2/4-point FFT" };
  app.name( "vedic" );
  app.require_subcommand( 1 );
  options o;

  auto* mul = app.add_subcommand( "mul", "multiply through the gate-level multiplier" );
  mul->add_option( "--a", o.a, "first operand" )->required();
  mul->add_option( "--b", o.b, "second operand" )->required();
  mul->add_option( "--impl", o.impl, "vedic or array" );
  mul->add_flag( "--signed", o.is_signed, "4-bit two's complement operands" );
  mul->add_flag( "--trace", o.trace, "print the digit and carry lines" );
  mul->add_flag( "--decimal", o.decimal, "digit-serial base-10 multiplication of any length" );

  auto* fft = app.add_subcommand( "fft", "run the reconfigurable FFT netlist" );
  fft->add_option( "--input", o.input, "sample document (JSON)" );
  fft->add_option( "--samples", o.samples, "inline samples re,im;re,im;..." );
  fft->add_option( "--select", o.select, "transform length: 2 or 4" );
  fft->add_option( "--twiddle", o.twiddle, "exact or qF (F fractional bits, 1..3)" );
  fft->add_option( "--impl", o.impl, "multiplier used by quantized twiddles: vedic or array" );

  auto* verify = app.add_subcommand( "verify", "run the oracle suites" );
  verify->add_option( "--unit", o.unit, "vedic2x2|vedic4x4|array4x4|adder|subtractor|fft|all" );

  auto* dump = app.add_subcommand( "dump", "write a unit in the structural netlist format" );
  dump->add_option( "--unit", o.dump_unit, "vedic2x2, vedic4x4, array4x4, adder<W>, subtractor<W>, ..." )->required();
  dump->add_option( "--out", o.out_path, "output file (default: standard output)" );

  auto* report = app.add_subcommand( "report", "delay and area comparison tables" );
  report->add_option( "--format", o.format, "text, csv or json" );

  std::vector<const char*> argv;
  argv.push_back( "vedic" );
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::CallForHelp& )
  {
    out << app.help();
    return exit_ok;
  }
  catch ( const CLI::CallForAllHelp& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return exit_ok;
  }
  catch ( const CLI::ParseError& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if ( fft->parsed() && o.select != 2 && o.select != 4 )
  {
    err << "error: --select must be 2 or 4\n";
    return exit_usage;
  }

  std::ostringstream result;
  int code = exit_ok;
  try
  {
    if ( mul->parsed() )
    {
      cmd_mul( o, result );
    }
    else if ( fft->parsed() )
    {
      cmd_fft( o, result );
    }
    else if ( verify->parsed() )
    {
      code = cmd_verify( o, result );
    }
    else if ( dump->parsed() )
    {
      cmd_dump( o, result );
    }
    else if ( report->parsed() )
    {
      cmd_report( o, result );
    }
  }
  catch ( const usage_error& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    err << "internal error: " << e.what() << '\n';
    return exit_failed;
  }
  out << result.str();
  return code;
}

} // namespace vedic::cli
