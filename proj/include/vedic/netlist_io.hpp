/*!
  \file netlist_io.hpp
  \brief Line-based structural text format for netlists

  \verbatim
  netlist <name> v1
  input <bus> <width>                # bit k is the net <bus>[k], k = 0 is the LSB
  const0 <net>
  const1 <net>
  gate <id> <KIND> <net> [<net>] -> <net>
  output <bus> <net> <net> ...      # LSB first
  \endverbatim

  Internal nets are written `n<int>`. Gates are written in ascending id, so the
  same netlist always dumps to the same bytes.
*/
#pragma once

#include "netlist.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vedic
{

inline std::string dump_netlist( const netlist& ntk )
{
  std::ostringstream os;
  os << "netlist " << ntk.name() << " v1\n";
  for ( auto const& in : ntk.inputs() )
  {
    os << "input " << in.name << ' ' << in.bits.size() << '\n';
  }

  bool used[2] = { false, false };
  auto mark = [&]( net_id n ) {
    if ( index( n ) < 2u )
    {
      used[index( n )] = true;
    }
  };
  for ( auto const& g : ntk.gates() )
  {
    for ( auto in : g.inputs )
    {
      mark( in );
    }
  }
  for ( auto const& out : ntk.outputs() )
  {
    for ( auto n : out.bits )
    {
      mark( n );
    }
  }
  if ( used[0] )
  {
    os << "const0 " << ntk.net( net_id{ 0 } ).name << '\n';
  }
  if ( used[1] )
  {
    os << "const1 " << ntk.net( net_id{ 1 } ).name << '\n';
  }

  for ( auto const& g : ntk.gates() )
  {
    os << "gate " << g.id << ' ' << to_string( g.kind );
    for ( auto in : g.inputs )
    {
      os << ' ' << ntk.net( in ).name;
    }
    os << " -> " << ntk.net( g.output ).name << '\n';
  }
  for ( auto const& out : ntk.outputs() )
  {
    os << "output " << out.name;
    for ( auto n : out.bits )
    {
      os << ' ' << ntk.net( n ).name;
    }
    os << '\n';
  }
  return os.str();
}

namespace detail
{

class netlist_parser
{
public:
  netlist parse( std::istream& is )
  {
    std::string line;
    std::optional<netlist_builder> builder;
    long long last_gate = -1;

    while ( std::getline( is, line ) )
    {
      ++line_no_;
      if ( auto hash = line.find( '#' ); hash != std::string::npos )
      {
        line.erase( hash );
      }
      std::istringstream ls( line );
      std::vector<std::string> tok;
      for ( std::string t; ls >> t; )
      {
        tok.push_back( t );
      }
      if ( tok.empty() )
      {
        continue;
      }

      if ( !builder )
      {
        if ( tok.size() != 3u || tok[0] != "netlist" || tok[2] != "v1" )
        {
          fail( "expected header 'netlist <name> v1'" );
        }
        builder.emplace( tok[1] );
        continue;
      }

      auto& b = *builder;
      if ( tok[0] == "input" )
      {
        if ( tok.size() != 3u )
        {
          fail( "expected 'input <bus> <width>'" );
        }
        auto const bits = b.add_input( tok[1], to_count( tok[2] ) );
        for ( std::size_t k = 0; k < bits.size(); ++k )
        {
          bind( tok[1] + "[" + std::to_string( k ) + "]", bits[k] );
        }
      }
      else if ( tok[0] == "const0" || tok[0] == "const1" )
      {
        if ( tok.size() != 2u )
        {
          fail( "expected '" + tok[0] + " <net>'" );
        }
        bind( tok[1], b.constant( tok[0] == "const1" ) );
      }
      else if ( tok[0] == "gate" )
      {
        if ( tok.size() < 6u || tok[tok.size() - 2u] != "->" )
        {
          fail( "expected 'gate <id> <KIND> <net> [<net>] -> <net>'" );
        }
        auto const gid = static_cast<long long>( to_count( tok[1] ) );
        if ( gid <= last_gate )
        {
          fail( "gate ids must be ascending" );
        }
        last_gate = gid;
        auto const kind = gate_kind_from_string( tok[2] );
        if ( !kind )
        {
          fail( "unknown gate kind '" + tok[2] + "'" );
        }
        std::vector<net_id> ins;
        for ( std::size_t i = 3; i + 2u < tok.size(); ++i )
        {
          ins.push_back( lookup( b, tok[i] ) );
        }
        auto const out = lookup( b, tok.back() );
        b.drive( out, *kind, ins );
      }
      else if ( tok[0] == "output" )
      {
        if ( tok.size() < 2u )
        {
          fail( "expected 'output <bus> <net> ...'" );
        }
        std::vector<net_id> bits;
        for ( std::size_t i = 2; i < tok.size(); ++i )
        {
          bits.push_back( lookup( b, tok[i] ) );
        }
        b.add_output( tok[1], bits );
      }
      else
      {
        fail( "unknown directive '" + tok[0] + "'" );
      }
    }
    if ( !builder )
    {
      fail( "missing 'netlist' header" );
    }
    return builder->finalize();
  }

private:
  [[noreturn]] void fail( const std::string& msg ) const
  {
    throw netlist_error( netlist_errc::parse, "line " + std::to_string( line_no_ ) + ": " + msg );
  }

  std::size_t to_count( const std::string& s ) const
  {
    std::size_t pos = 0;
    unsigned long v = 0;
    try
    {
      v = std::stoul( s, &pos );
    }
    catch ( const std::exception& )
    {
      fail( "expected a number, got '" + s + "'" );
    }
    if ( pos != s.size() )
    {
      fail( "expected a number, got '" + s + "'" );
    }
    return v;
  }

  void bind( const std::string& name, net_id n )
  {
    if ( !names_.emplace( name, n ).second )
    {
      fail( "net '" + name + "' defined twice" );
    }
  }

  /* forward references are allowed; the net is driven by a later line */
  net_id lookup( netlist_builder& b, const std::string& name )
  {
    auto it = names_.find( name );
    if ( it != names_.end() )
    {
      return it->second;
    }
    auto const n = b.declare_net();
    names_.emplace( name, n );
    return n;
  }

  std::unordered_map<std::string, net_id> names_;
  std::size_t line_no_{ 0 };
};

} // namespace detail

inline netlist parse_netlist( std::istream& is )
{
  return detail::netlist_parser{}.parse( is );
}

inline netlist parse_netlist( std::string_view text )
{
  std::istringstream is{ std::string( text ) };
  return parse_netlist( is );
}

} // namespace vedic
