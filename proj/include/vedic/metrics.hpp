/*!
  \file metrics.hpp
  \brief Delay/area comparison of Vedic and conventional FFT datapaths

  Delay is the critical path in gates (unit-delay model), area is the gate
  count. Both variants of every architecture are built from the same
  configuration and differ only in the 4x4 multiplier core, so twiddles are
  quantized: with exact twiddles no multiplier is instantiated at all.
*/
#pragma once

#include "arith.hpp"
#include "fft.hpp"
#include "netlist.hpp"

#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vedic
{

struct cost_report
{
  std::string unit_name;
  std::size_t depth_units{ 0 };
  std::map<gate_kind, std::size_t> gates_by_kind;
  std::size_t gates_total{ 0 };
};

inline cost_report make_cost_report( const netlist& ntk, std::string unit_name = {} )
{
  auto census = gate_counts( ntk );
  return { unit_name.empty() ? ntk.name() : std::move( unit_name ), critical_path_depth( ntk ), std::move( census.by_kind ),
           census.total };
}

enum class metric
{
  delay,
  area
};

constexpr std::string_view to_string( metric m ) noexcept
{
  return m == metric::delay ? "delay_units" : "gates_total";
}

enum class report_format
{
  text,
  csv,
  json
};

inline std::optional<report_format> report_format_from_string( std::string_view s ) noexcept
{
  if ( s == "text" )
  {
    return report_format::text;
  }
  if ( s == "csv" )
  {
    return report_format::csv;
  }
  if ( s == "json" )
  {
    return report_format::json;
  }
  return std::nullopt;
}

struct table_row
{
  std::string architecture; // "2-point", "4-point" or "reconfigurable"
  multiplier_impl impl;
  std::int64_t value;

  std::string label() const
  {
    return std::string( impl == multiplier_impl::vedic ? "Vedic " : "Conventional " ) + architecture + " FFT";
  }
};

struct comparison_table
{
  metric kind{ metric::delay };
  std::vector<table_row> rows;
  std::string model_note;
};

struct direction
{
  std::string architecture;
  std::int64_t conventional;
  std::int64_t vedic;
  bool vedic_not_worse() const noexcept { return vedic <= conventional; }
};

/*! \brief Pairs conventional and Vedic rows per architecture, in first-appearance order. */
inline std::vector<direction> directions( const comparison_table& table )
{
  std::vector<direction> out;
  for ( auto const& row : table.rows )
  {
    auto it = std::find_if( out.begin(), out.end(), [&]( auto const& d ) { return d.architecture == row.architecture; } );
    if ( it == out.end() )
    {
      out.push_back( { row.architecture, 0, 0 } );
      it = std::prev( out.end() );
    }
    ( row.impl == multiplier_impl::vedic ? it->vedic : it->conventional ) = row.value;
  }
  return out;
}

struct comparison
{
  comparison_table delay;
  comparison_table area;
  std::vector<cost_report> reports;
};

class comparison_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct fft_variant
{
  std::string architecture;
  fft_config config;
  netlist circuit;
};

/*! \brief Exhaustive truth-table equality of two a,b (4) -> p (8) multipliers. */
inline bool same_multiplier_function( const netlist& x, const netlist& y )
{
  for ( std::int64_t a = 0; a < 16; ++a )
  {
    for ( std::int64_t b = 0; b < 16; ++b )
    {
      assignment const in = { { "a", bit_vector::from_int( a, 4u ) }, { "b", bit_vector::from_int( b, 4u ) } };
      if ( !( x.evaluate( in ).at( "p" ) == y.evaluate( in ).at( "p" ) ) )
      {
        return false;
      }
    }
  }
  return true;
}

inline std::string model_note( const twiddle_mode& mode )
{
  std::ostringstream os;
  os << "unit-delay model: every gate costs 1 delay unit and wires cost 0; area is the raw gate count"
     << " (AND/OR/XOR/NOT/NAND/NOR/XNOR), no LUT or slice packing; twiddles quantized to Q1."
     << mode.frac_bits << " so the 4x4 multiplier sits in the datapath; variants differ only in the multiplier core."
     << " FPGA reference figures (Virtex-2 Pro XC2VP2) are not reproduced by this model: reconfigurable FFT 13.931 ns"
     << " vs Vedic reconfigurable 13.325 ns, 81 vs 69 slices, 147 vs 127 4-input LUTs.";
  return os.str();
}

/*!
  \brief Builds the delay and area tables.

  Refuses (comparison_error) an empty variant set, variants whose
  configurations differ in anything but the multiplier, architectures missing
  one of the two multipliers, and multiplier cores that are not functionally
  identical.
*/
inline comparison compare( const std::vector<fft_variant>& variants, const netlist& vedic_core, const netlist& conventional_core )
{
  if ( variants.empty() )
  {
    throw comparison_error( "no variants to compare" );
  }
  auto const& ref = variants.front().config;
  for ( auto const& v : variants )
  {
    if ( v.config.input_width != ref.input_width || !( v.config.twiddle == ref.twiddle ) )
    {
      throw comparison_error( "variant '" + v.architecture + "' uses a different configuration" );
    }
  }
  for ( auto const& v : variants )
  {
    auto const other = v.config.multiplier == multiplier_impl::vedic ? multiplier_impl::array : multiplier_impl::vedic;
    auto const paired = std::any_of( variants.begin(), variants.end(), [&]( auto const& w ) {
      return w.architecture == v.architecture && w.config.multiplier == other;
    } );
    if ( !paired )
    {
      throw comparison_error( "architecture '" + v.architecture + "' lacks a " + std::string( to_string( other ) ) + " variant" );
    }
  }
  if ( !same_multiplier_function( vedic_core, conventional_core ) )
  {
    throw comparison_error( "multiplier cores are not functionally identical; refusing to compare" );
  }

  comparison c;
  auto const note = model_note( ref.twiddle );
  c.delay = { metric::delay, {}, note };
  c.area = { metric::area, {}, note };
  for ( auto const& v : variants )
  {
    auto const impl = v.config.multiplier;
    c.reports.push_back( make_cost_report( v.circuit, std::string( to_string( impl ) ) + " " + v.architecture ) );
    auto const& r = c.reports.back();
    c.delay.rows.push_back( { v.architecture, impl, static_cast<std::int64_t>( r.depth_units ) } );
    c.area.rows.push_back( { v.architecture, impl, static_cast<std::int64_t>( r.gates_total ) } );
  }
  return c;
}

/*! \brief The six standard variants: {conventional, Vedic} x {2-point, 4-point, reconfigurable}. */
inline std::vector<fft_variant> standard_variants( unsigned width = 4u, unsigned frac_bits = 3u )
{
  std::vector<fft_variant> v;
  for ( auto impl : { multiplier_impl::array, multiplier_impl::vedic } )
  {
    fft_config cfg{ 4u, twiddle_mode::fixed_point( frac_bits ), width, impl };
    cfg.validate();
    v.push_back( { "2-point", cfg, build_butterfly2( width ) } );
    v.push_back( { "4-point", cfg, build_fft4( width, cfg.twiddle, impl ) } );
    v.push_back( { "reconfigurable", cfg, build_reconfigurable_fft( cfg ) } );
  }
  /* conventional row first within each architecture */
  std::stable_sort( v.begin(), v.end(), []( auto const& a, auto const& b ) {
    auto rank = []( std::string_view s ) { return s == "2-point" ? 0 : s == "4-point" ? 1 : 2; };
    return rank( a.architecture ) < rank( b.architecture );
  } );
  return v;
}

inline comparison compare_fft_variants( unsigned width = 4u, unsigned frac_bits = 3u )
{
  return compare( standard_variants( width, frac_bits ), build_vedic4x4(), build_array4x4() );
}

namespace detail
{

inline std::string csv_field( const std::string& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
  {
    return s;
  }
  std::string q = "\"";
  for ( char c : s )
  {
    if ( c == '"' )
    {
      q += '"';
    }
    q += c;
  }
  return q + '"';
}

inline void check_rows( const comparison_table& t )
{
  if ( t.rows.empty() )
  {
    throw comparison_error( "refusing to render an empty table" );
  }
}

inline void render_text_body( std::ostream& os, const comparison_table& t )
{
  os << ( t.kind == metric::delay ? "Delay comparison (critical path, unit delays)\n"
                                  : "Area comparison (gate count)\n" );
  os << std::left << std::setw( 18 ) << "Architecture" << std::right << std::setw( 14 ) << "Conventional"
     << std::setw( 10 ) << "Vedic" << "  Vedic<=Conventional\n";
  std::vector<std::string> worse;
  for ( auto const& d : directions( t ) )
  {
    os << std::left << std::setw( 18 ) << d.architecture << std::right << std::setw( 14 ) << d.conventional
       << std::setw( 10 ) << d.vedic << "  " << ( d.vedic_not_worse() ? "yes" : "no" ) << '\n';
    if ( !d.vedic_not_worse() )
    {
      worse.push_back( d.architecture );
    }
  }
  if ( worse.empty() )
  {
    os << "direction: Vedic <= conventional on every row\n";
  }
  else
  {
    os << "direction: Vedic exceeds conventional on";
    for ( auto const& w : worse )
    {
      os << ' ' << w;
    }
    os << " (opposite to the FPGA reference ordering; this is what the gate model yields)\n";
  }
}

} // namespace detail

inline std::string render( const std::vector<const comparison_table*>& tables, report_format format )
{
  for ( auto const* t : tables )
  {
    detail::check_rows( *t );
  }
  if ( tables.empty() )
  {
    throw comparison_error( "refusing to render an empty table" );
  }
  std::ostringstream os;
  switch ( format )
  {
  case report_format::text:
    for ( auto const* t : tables )
    {
      detail::render_text_body( os, *t );
      os << '\n';
    }
    os << "model: " << tables.front()->model_note << '\n';
    break;
  case report_format::csv:
    os << "architecture,metric,value,model\n";
    for ( auto const* t : tables )
    {
      for ( auto const& r : t->rows )
      {
        os << detail::csv_field( r.label() ) << ',' << to_string( t->kind ) << ',' << r.value << ','
           << detail::csv_field( t->model_note ) << '\n';
      }
    }
    break;
  case report_format::json:
  {
    auto doc = nlohmann::ordered_json::array();
    for ( auto const* t : tables )
    {
      for ( auto const& r : t->rows )
      {
        doc.push_back( { { "architecture", r.label() },
                         { "metric", std::string( to_string( t->kind ) ) },
                         { "value", r.value },
                         { "model", t->model_note } } );
      }
    }
    os << doc.dump( 2 ) << '\n';
    break;
  }
  }
  return os.str();
}

inline std::string render( const comparison_table& table, report_format format )
{
  return render( std::vector<const comparison_table*>{ &table }, format );
}

inline std::string render( const comparison& c, report_format format )
{
  return render( std::vector<const comparison_table*>{ &c.delay, &c.area }, format );
}

inline std::string render( const comparison_table& table, std::string_view format )
{
  auto const f = report_format_from_string( format );
  if ( !f )
  {
    throw std::invalid_argument( "unknown report format '" + std::string( format ) + "'" );
  }
  return render( table, *f );
}

} // namespace vedic
