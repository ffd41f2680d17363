#include <catch_amalgamated.hpp>

#include "vedic_cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace
{

struct outcome
{
  int code;
  std::string out;
  std::string err;
};

outcome invoke( std::vector<std::string> args )
{
  std::ostringstream out, err;
  auto const code = vedic::cli::run( args, out, err );
  outcome r{ code, out.str(), err.str() };
  /* one stream or the other, never both */
  CHECK( ( r.out.empty() || r.err.empty() ) );
  if ( code != 0 )
  {
    CHECK_FALSE( r.err.empty() );
  }
  return r;
}

std::size_t count_lines( const std::string& s, std::string_view prefix )
{
  std::size_t n = 0;
  std::istringstream is( s );
  for ( std::string line; std::getline( is, line ); )
  {
    n += line.rfind( prefix, 0 ) == 0u ? 1u : 0u;
  }
  return n;
}

std::filesystem::path temp_file( const std::string& name, const std::string& content )
{
  auto const p = std::filesystem::temp_directory_path() / ( "vedic_cli_test_" + name );
  std::ofstream( p ) << content;
  return p;
}

std::vector<std::pair<long, long>> spectrum_of( const std::string& doc )
{
  std::vector<std::pair<long, long>> s;
  auto const parsed = nlohmann::json::parse( doc );
  for ( auto const& c : parsed.at( "spectrum" ) )
  {
    s.emplace_back( c[0].get<long>(), c[1].get<long>() );
  }
  return s;
}

long binary_value( const std::string& bits )
{
  long v = 0;
  for ( char c : bits )
  {
    v = 2 * v + ( c - '0' );
  }
  return v;
}

} // namespace

TEST_CASE( "mul", "[cli]" )
{
  CHECK( invoke( { "mul", "--a", "13", "--b", "11", "--impl", "vedic" } ).out == "143\n" );
  CHECK( invoke( { "mul", "--a", "13", "--b", "11", "--impl", "array" } ).out == "143\n" );
  CHECK( invoke( { "mul", "--a", "15", "--b", "15" } ).out == "225\n" );
  CHECK( invoke( { "mul", "--a", "234", "--b", "316", "--decimal", "--trace" } ).out ==
         "digit_line 61724\ncarry_line 1222\nproduct 73944\n" );
  CHECK( invoke( { "mul", "--a", "123456789", "--b", "987654321", "--decimal" } ).out == "121932631112635269\n" );

  CHECK( invoke( { "mul", "--a", "-3", "--b", "5", "--signed" } ).out == "-15\n" );
  CHECK( invoke( { "mul", "--a=-8", "--b", "1", "--signed" } ).out == "-7\nsaturated\n" );
  CHECK( invoke( { "mul", "--a", "7", "--b", "-7", "--signed", "--impl", "array" } ).out == "-49\n" );
}

TEST_CASE( "mul binary trace", "[cli]" )
{
  for ( int a = 0; a < 16; ++a )
  {
    for ( int b = 0; b < 16; b += 3 )
    {
      auto const r = invoke( { "mul", "--a", std::to_string( a ), "--b", std::to_string( b ), "--trace" } );
      REQUIRE( r.code == 0 );
      std::istringstream is( r.out );
      std::string key, digits, carries, product;
      std::getline( is, key );
      is >> key >> digits >> key >> carries >> key >> product;
      CHECK( binary_value( digits ) + 2 * binary_value( carries ) == a * b );
      CHECK( product == std::to_string( a * b ) );
    }
  }
}

TEST_CASE( "mul usage errors", "[cli]" )
{
  CHECK( invoke( { "mul", "--a", "16", "--b", "1" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "-1", "--b", "1" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "8", "--b", "1", "--signed" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "-9", "--b", "1", "--signed" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "x", "--b", "1" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "12a", "--b", "1", "--decimal" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "3" } ).code == 2 );
  CHECK( invoke( { "mul", "--a", "3", "--b", "1", "--impl", "booth" } ).code == 2 );
}

TEST_CASE( "fft", "[cli]" )
{
  auto const impulse = invoke( { "fft", "--samples", "1,0;0,0;0,0;0,0", "--select", "4" } );
  CHECK( impulse.code == 0 );
  CHECK( spectrum_of( impulse.out ) == std::vector<std::pair<long, long>>{ { 1, 0 }, { 1, 0 }, { 1, 0 }, { 1, 0 } } );

  auto const pair = invoke( { "fft", "--samples", "3,0;5,0", "--select", "2" } );
  CHECK( spectrum_of( pair.out ) == std::vector<std::pair<long, long>>{ { 8, 0 }, { -2, 0 }, { 0, 0 }, { 0, 0 } } );
  CHECK( nlohmann::json::parse( pair.out ).at( "select" ) == 2 );

  auto const ramp = temp_file( "ramp.json", R"({"samples": [[1, 0], [2, 0], [3, 0], [4, 0]]})" );
  CHECK( spectrum_of( invoke( { "fft", "--input", ramp.string() } ).out ) ==
         std::vector<std::pair<long, long>>{ { 10, 0 }, { -2, 2 }, { -2, 0 }, { -2, -2 } } );

  auto const wide = temp_file( "wide.json", R"({"samples": [[100, 0], [0, 0], [0, -100], [0, 0]], "width": 8})" );
  CHECK( spectrum_of( invoke( { "fft", "--input", wide.string() } ).out ) ==
         std::vector<std::pair<long, long>>{ { 100, -100 }, { 100, 100 }, { 100, -100 }, { 100, 100 } } );

  auto const q = invoke( { "fft", "--samples", "1,0;2,0;3,0;4,0", "--twiddle", "q3", "--impl", "array" } );
  CHECK( q.code == 0 );
  CHECK( q.out == invoke( { "fft", "--samples", "1,0;2,0;3,0;4,0", "--twiddle", "q3", "--impl", "vedic" } ).out );

  CHECK( invoke( { "fft", "--samples", "1,0;2,0;3,0;4,0" } ).out == invoke( { "fft", "--samples", "1,0;2,0;3,0;4,0" } ).out );
}

TEST_CASE( "fft usage errors", "[cli]" )
{
  auto const bad = temp_file( "bad.json", "{ not json" );
  CHECK( invoke( { "fft", "--samples", "1,0;0,0;0,0;0,0", "--select", "3" } ).code == 2 );
  CHECK( invoke( { "fft", "--input", bad.string() } ).code == 2 );
  CHECK( invoke( { "fft", "--input", "/nonexistent/samples.json" } ).code == 2 );
  CHECK( invoke( { "fft", "--samples", "7,0;-8,0", "--select", "2" } ).code == 0 );
  CHECK( invoke( { "fft", "--samples", "8,0;0,0", "--select", "2" } ).code == 2 );
  CHECK( invoke( { "fft", "--samples", "1,0;0,0;0,0" } ).code == 2 );
  CHECK( invoke( { "fft", "--samples", "1,z;0,0;0,0;0,0" } ).code == 2 );
  CHECK( invoke( { "fft" } ).code == 2 );
  CHECK( invoke( { "fft", "--samples", "1", "--input", bad.string() } ).code == 2 );
  CHECK( invoke( { "fft", "--samples", "1,0;0,0;0,0;0,0", "--twiddle", "q9" } ).code == 2 );
}

TEST_CASE( "verify", "[cli]" )
{
  auto const v4 = invoke( { "verify", "--unit", "vedic4x4" } );
  CHECK( v4.code == 0 );
  CHECK( v4.out == "vedic4x4: 256/256 pass\n" );
  CHECK( invoke( { "verify", "--unit", "vedic2x2" } ).out == "vedic2x2: 16/16 pass\n" );

  auto const all = invoke( { "verify", "--unit", "all" } );
  CHECK( all.code == 0 );
  CHECK( all.out.find( "total: " ) != std::string::npos );
  CHECK( count_lines( all.out, "" ) == 7u );
  CHECK( all.out.find( "FAIL" ) == std::string::npos );

  CHECK( invoke( { "verify", "--unit", "bogus" } ).code == 2 );
}

TEST_CASE( "dump", "[cli]" )
{
  auto const d = invoke( { "dump", "--unit", "vedic2x2" } );
  CHECK( d.code == 0 );
  CHECK( count_lines( d.out, "gate " ) == 8u );
  CHECK( d.out == invoke( { "dump", "--unit", "vedic2x2" } ).out );
  CHECK( count_lines( invoke( { "dump", "--unit", "adder8" } ).out, "gate " ) == 40u );
  CHECK( count_lines( invoke( { "dump", "--unit", "fft_reconfigurable" } ).out, "input " ) == 9u );

  auto const path = std::filesystem::temp_directory_path() / "vedic_cli_test_dump.txt";
  auto const f = invoke( { "dump", "--unit", "vedic4x4", "--out", path.string() } );
  CHECK( f.code == 0 );
  CHECK( f.out.empty() );
  std::ifstream in( path );
  std::stringstream content;
  content << in.rdbuf();
  CHECK( content.str() == invoke( { "dump", "--unit", "vedic4x4" } ).out );
  CHECK( vedic::gate_counts( vedic::parse_netlist( content.str() ) ).total == 82u );

  CHECK( invoke( { "dump", "--unit", "nope" } ).code == 2 );
  CHECK( invoke( { "dump", "--unit", "adder0" } ).code == 2 );
  CHECK( invoke( { "dump", "--unit", "vedic2x2", "--out", "/nonexistent/dir/out.txt" } ).code == 2 );
  CHECK( invoke( { "dump" } ).code == 2 );
}

TEST_CASE( "report", "[cli]" )
{
  auto const text = invoke( { "report", "--format", "text" } );
  CHECK( text.code == 0 );
  CHECK( count_lines( text.out, "Delay comparison" ) == 1u );
  CHECK( count_lines( text.out, "Area comparison" ) == 1u );
  CHECK( count_lines( text.out, "model: " ) == 1u );
  CHECK( text.out == invoke( { "report" } ).out );

  auto const csv = invoke( { "report", "--format", "csv" } );
  CHECK( count_lines( csv.out, "" ) == 13u );
  CHECK( count_lines( csv.out, "architecture,metric,value,model" ) == 1u );
  CHECK( count_lines( csv.out, "Vedic reconfigurable FFT,delay_units," ) == 1u );
  CHECK( count_lines( csv.out, "Conventional reconfigurable FFT,gates_total," ) == 1u );

  auto const json = invoke( { "report", "--format", "json" } );
  CHECK( nlohmann::json::parse( json.out ).size() == 12u );
  CHECK( json.out == invoke( { "report", "--format", "json" } ).out );

  CHECK( invoke( { "report", "--format", "xml" } ).code == 2 );
}

TEST_CASE( "top level", "[cli]" )
{
  CHECK( invoke( {} ).code == 2 );
  CHECK( invoke( { "frobnicate" } ).code == 2 );
  auto const help = invoke( { "--help" } );
  CHECK( help.code == 0 );
  CHECK( help.out.find( "mul" ) != std::string::npos );
}
