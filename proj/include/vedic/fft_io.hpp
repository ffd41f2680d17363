/*!
  \file fft_io.hpp
  \brief Sample and spectrum documents

  Samples:  {"samples": [[re, im], ...], "width": 4}
  Spectrum: {"spectrum": [[re, im], ...], "output_width": W, "scale_log2": S, "select": N}
*/
#pragma once

#include "fft.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vedic
{

class format_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct sample_set
{
  std::vector<fixed_complex> samples;
  unsigned width{ 4 };
};

inline sample_set parse_sample_document( std::string_view text )
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse( text );
  }
  catch ( const nlohmann::json::parse_error& e )
  {
    throw format_error( std::string( "malformed sample document: " ) + e.what() );
  }
  if ( !doc.is_object() || !doc.contains( "samples" ) || !doc["samples"].is_array() )
  {
    throw format_error( "sample document needs a \"samples\" array" );
  }
  sample_set s;
  if ( doc.contains( "width" ) )
  {
    if ( !doc["width"].is_number_unsigned() )
    {
      throw format_error( "\"width\" must be a positive integer" );
    }
    s.width = doc["width"].get<unsigned>();
  }
  for ( auto const& pair : doc["samples"] )
  {
    if ( !pair.is_array() || pair.size() != 2u || !pair[0].is_number_integer() || !pair[1].is_number_integer() )
    {
      throw format_error( "each sample must be an [re, im] pair of integers" );
    }
    s.samples.push_back( { pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>() } );
  }
  return s;
}

/*! \brief Inline form "re,im;re,im;..." (an omitted imaginary part means 0). */
inline std::vector<fixed_complex> parse_inline_samples( std::string_view text )
{
  std::vector<fixed_complex> out;
  auto to_int = []( const std::string& t ) {
    std::size_t pos = 0;
    long long v = 0;
    try
    {
      v = std::stoll( t, &pos );
    }
    catch ( const std::exception& )
    {
      throw format_error( "not an integer: '" + t + "'" );
    }
    if ( pos != t.size() )
    {
      throw format_error( "not an integer: '" + t + "'" );
    }
    return static_cast<std::int64_t>( v );
  };

  std::stringstream ss{ std::string( text ) };
  for ( std::string item; std::getline( ss, item, ';' ); )
  {
    auto const comma = item.find( ',' );
    if ( comma == std::string::npos )
    {
      out.push_back( { to_int( item ), 0 } );
    }
    else
    {
      out.push_back( { to_int( item.substr( 0, comma ) ), to_int( item.substr( comma + 1u ) ) } );
    }
  }
  if ( out.empty() )
  {
    throw format_error( "no samples given" );
  }
  return out;
}

inline std::string spectrum_document( const fft_result& r )
{
  nlohmann::ordered_json doc;
  auto spectrum = nlohmann::ordered_json::array();
  for ( auto const& c : r.spectrum )
  {
    spectrum.push_back( { c.re, c.im } );
  }
  doc["spectrum"] = spectrum;
  doc["output_width"] = r.output_width;
  doc["scale_log2"] = r.scale_log2;
  doc["select"] = r.select;
  return doc.dump();
}

} // namespace vedic
