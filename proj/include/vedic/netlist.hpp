/*!
  \file netlist.hpp
  \brief Combinational gate-level netlists: construction, evaluation, timing and area

  A netlist is built through a `netlist_builder` and frozen by `finalize()`.
  The frozen `netlist` is immutable, so evaluation and the analyses below are
  safe to run concurrently on a shared instance.

  Conventions:
  - every bus is least significant bit first;
  - nets 0 and 1 are the constants 0 and 1 and are always driven;
  - gates are evaluated in topological order, ties broken by ascending gate id;
  - timing is unit delay: each gate costs 1, wires cost 0.
*/
#pragma once

#include "bit_vector.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vedic
{

enum class gate_kind : std::uint8_t
{
  and_,
  or_,
  xor_,
  not_,
  nand_,
  nor_,
  xnor_
};

inline constexpr std::array<gate_kind, 7> all_gate_kinds = { gate_kind::and_, gate_kind::or_, gate_kind::xor_,
                                                             gate_kind::not_, gate_kind::nand_, gate_kind::nor_,
                                                             gate_kind::xnor_ };

constexpr std::size_t arity( gate_kind kind ) noexcept
{
  return kind == gate_kind::not_ ? 1u : 2u;
}

constexpr std::string_view to_string( gate_kind kind ) noexcept
{
  switch ( kind )
  {
  case gate_kind::and_: return "AND";
  case gate_kind::or_: return "OR";
  case gate_kind::xor_: return "XOR";
  case gate_kind::not_: return "NOT";
  case gate_kind::nand_: return "NAND";
  case gate_kind::nor_: return "NOR";
  case gate_kind::xnor_: return "XNOR";
  }
  return "?";
}

inline std::optional<gate_kind> gate_kind_from_string( std::string_view s ) noexcept
{
  for ( auto k : all_gate_kinds )
  {
    if ( to_string( k ) == s )
    {
      return k;
    }
  }
  return std::nullopt;
}

constexpr bool apply( gate_kind kind, bool a, bool b ) noexcept
{
  switch ( kind )
  {
  case gate_kind::and_: return a && b;
  case gate_kind::or_: return a || b;
  case gate_kind::xor_: return a != b;
  case gate_kind::not_: return !a;
  case gate_kind::nand_: return !( a && b );
  case gate_kind::nor_: return !( a || b );
  case gate_kind::xnor_: return a == b;
  }
  return false;
}

enum class net_id : std::uint32_t
{
};

constexpr std::uint32_t index( net_id n ) noexcept
{
  return static_cast<std::uint32_t>( n );
}

enum class netlist_errc
{
  unknown_net,
  arity,
  finalized,
  multiple_drivers,
  floating_net,
  floating_output,
  cycle,
  duplicate_bus,
  unknown_bus,
  missing_input,
  width_mismatch,
  parse
};

class netlist_error : public std::runtime_error
{
public:
  netlist_error( netlist_errc code, const std::string& what ) : std::runtime_error( what ), code_( code ) {}
  netlist_errc code() const noexcept { return code_; }

private:
  netlist_errc code_;
};

enum class net_source : std::uint8_t
{
  undriven,
  const0,
  const1,
  input,
  gate
};

struct net_info
{
  net_source source{ net_source::undriven };
  std::uint32_t driver{ 0 }; // gate id when source == gate
  std::string name;
};

struct gate
{
  std::uint32_t id;
  gate_kind kind;
  std::vector<net_id> inputs;
  net_id output;
};

struct bus
{
  std::string name;
  std::vector<net_id> bits;
};

using assignment = std::map<std::string, bit_vector, std::less<>>;

class netlist_builder;

class netlist
{
public:
  const std::string& name() const noexcept { return name_; }
  const std::vector<bus>& inputs() const noexcept { return inputs_; }
  const std::vector<bus>& outputs() const noexcept { return outputs_; }
  const std::vector<gate>& gates() const noexcept { return gates_; }
  const std::vector<net_info>& nets() const noexcept { return nets_; }
  std::size_t num_nets() const noexcept { return nets_.size(); }
  const net_info& net( net_id n ) const { return nets_.at( index( n ) ); }

  /*! \brief Gate ids in evaluation order. */
  const std::vector<std::uint32_t>& topological_order() const noexcept { return order_; }

  const bus* find_input( std::string_view bus_name ) const noexcept { return find( inputs_, bus_name ); }
  const bus* find_output( std::string_view bus_name ) const noexcept { return find( outputs_, bus_name ); }

  /*! \brief Computes the value of every net; index by net id. */
  std::vector<std::uint8_t> simulate( const assignment& values ) const
  {
    std::vector<std::uint8_t> v( nets_.size(), 0u );
    v[1] = 1u;

    for ( auto const& [bus_name, bits] : values )
    {
      if ( find( inputs_, bus_name ) == nullptr )
      {
        throw netlist_error( netlist_errc::unknown_bus, "no input bus named '" + bus_name + "'" );
      }
    }
    for ( auto const& in : inputs_ )
    {
      auto it = values.find( in.name );
      if ( it == values.end() )
      {
        throw netlist_error( netlist_errc::missing_input, "input bus '" + in.name + "' not assigned" );
      }
      if ( it->second.width() != in.bits.size() )
      {
        throw netlist_error( netlist_errc::width_mismatch, "input bus '" + in.name + "' has width " +
                                                               std::to_string( in.bits.size() ) + ", got " +
                                                               std::to_string( it->second.width() ) );
      }
      for ( std::size_t k = 0; k < in.bits.size(); ++k )
      {
        v[index( in.bits[k] )] = it->second[k] ? 1u : 0u;
      }
    }

    for ( auto gid : order_ )
    {
      auto const& g = gates_[gid];
      bool const a = v[index( g.inputs[0] )] != 0u;
      bool const b = g.inputs.size() > 1u && v[index( g.inputs[1] )] != 0u;
      v[index( g.output )] = apply( g.kind, a, b ) ? 1u : 0u;
    }
    return v;
  }

  /*! \brief Evaluates all output buses; results use the unsigned interpretation. */
  assignment evaluate( const assignment& values ) const
  {
    auto const v = simulate( values );
    assignment result;
    for ( auto const& out : outputs_ )
    {
      std::vector<bool> bits( out.bits.size() );
      for ( std::size_t k = 0; k < bits.size(); ++k )
      {
        bits[k] = v[index( out.bits[k] )] != 0u;
      }
      result.emplace( out.name, bit_vector( std::move( bits ) ) );
    }
    return result;
  }

private:
  friend class netlist_builder;

  static const bus* find( const std::vector<bus>& buses, std::string_view bus_name ) noexcept
  {
    auto it = std::find_if( buses.begin(), buses.end(), [&]( auto const& b ) { return b.name == bus_name; } );
    return it == buses.end() ? nullptr : &*it;
  }

  std::string name_;
  std::vector<net_info> nets_;
  std::vector<gate> gates_;
  std::vector<bus> inputs_;
  std::vector<bus> outputs_;
  std::vector<std::uint32_t> order_;
};

class netlist_builder
{
public:
  explicit netlist_builder( std::string name = "netlist" )
  {
    n_.name_ = std::move( name );
    n_.nets_.push_back( { net_source::const0, 0u, "n0" } );
    n_.nets_.push_back( { net_source::const1, 0u, "n1" } );
  }

  net_id const0() const noexcept { return net_id{ 0 }; }
  net_id const1() const noexcept { return net_id{ 1 }; }
  net_id constant( bool value ) const noexcept { return value ? const1() : const0(); }

  std::vector<net_id> add_input( const std::string& bus_name, std::size_t width )
  {
    check_open();
    check_new_bus( n_.inputs_, bus_name );
    bus b{ bus_name, {} };
    for ( std::size_t k = 0; k < width; ++k )
    {
      auto const id = net_id{ static_cast<std::uint32_t>( n_.nets_.size() ) };
      n_.nets_.push_back( { net_source::input, 0u, bus_name + "[" + std::to_string( k ) + "]" } );
      b.bits.push_back( id );
    }
    n_.inputs_.push_back( b );
    return b.bits;
  }

  /*! \brief Creates a net with no driver yet; attach one later with `drive`. */
  net_id declare_net()
  {
    check_open();
    auto const id = net_id{ static_cast<std::uint32_t>( n_.nets_.size() ) };
    n_.nets_.push_back( { net_source::undriven, 0u, "n" + std::to_string( index( id ) ) } );
    return id;
  }

  net_id add_gate( gate_kind kind, std::span<const net_id> inputs )
  {
    check_gate( kind, inputs );
    auto const out = declare_net();
    connect( kind, inputs, out );
    return out;
  }

  net_id add_gate( gate_kind kind, std::initializer_list<net_id> inputs )
  {
    return add_gate( kind, std::span<const net_id>( inputs.begin(), inputs.size() ) );
  }

  /*! \brief Adds a gate whose output is the previously declared net `target`. */
  void drive( net_id target, gate_kind kind, std::span<const net_id> inputs )
  {
    check_gate( kind, inputs );
    check_net( target );
    if ( n_.nets_[index( target )].source != net_source::undriven )
    {
      throw netlist_error( netlist_errc::multiple_drivers, "net " + n_.nets_[index( target )].name + " is already driven" );
    }
    connect( kind, inputs, target );
  }

  void drive( net_id target, gate_kind kind, std::initializer_list<net_id> inputs )
  {
    drive( target, kind, std::span<const net_id>( inputs.begin(), inputs.size() ) );
  }

  net_id and_( net_id a, net_id b ) { return add_gate( gate_kind::and_, { a, b } ); }
  net_id or_( net_id a, net_id b ) { return add_gate( gate_kind::or_, { a, b } ); }
  net_id xor_( net_id a, net_id b ) { return add_gate( gate_kind::xor_, { a, b } ); }
  net_id not_( net_id a ) { return add_gate( gate_kind::not_, { a } ); }
  net_id nand_( net_id a, net_id b ) { return add_gate( gate_kind::nand_, { a, b } ); }
  net_id nor_( net_id a, net_id b ) { return add_gate( gate_kind::nor_, { a, b } ); }
  net_id xnor_( net_id a, net_id b ) { return add_gate( gate_kind::xnor_, { a, b } ); }

  void add_output( const std::string& bus_name, std::span<const net_id> bits )
  {
    check_open();
    check_new_bus( n_.outputs_, bus_name );
    for ( auto n : bits )
    {
      check_net( n );
    }
    n_.outputs_.push_back( { bus_name, { bits.begin(), bits.end() } } );
  }

  void add_output( const std::string& bus_name, std::initializer_list<net_id> bits )
  {
    add_output( bus_name, std::span<const net_id>( bits.begin(), bits.end() ) );
  }

  /*! \brief Declares an output bus whose bits are connected later with `drive_output`. */
  void declare_output( const std::string& bus_name, std::size_t width )
  {
    check_open();
    check_new_bus( n_.outputs_, bus_name );
    n_.outputs_.push_back( { bus_name, std::vector<net_id>( width, unconnected ) } );
  }

  void drive_output( std::string_view bus_name, std::size_t bit, net_id n )
  {
    check_open();
    check_net( n );
    auto it = std::find_if( n_.outputs_.begin(), n_.outputs_.end(), [&]( auto const& b ) { return b.name == bus_name; } );
    if ( it == n_.outputs_.end() )
    {
      throw netlist_error( netlist_errc::unknown_bus, "no output bus named '" + std::string( bus_name ) + "'" );
    }
    if ( bit >= it->bits.size() )
    {
      throw netlist_error( netlist_errc::width_mismatch, "bit " + std::to_string( bit ) + " outside bus '" + it->name + "'" );
    }
    it->bits[bit] = n;
  }

  std::size_t num_gates() const noexcept { return n_.gates_.size(); }
  bool is_finalized() const noexcept { return finalized_; }

  /*! \brief Validates the single-driver and acyclicity rules and freezes the netlist. */
  netlist finalize()
  {
    check_open();

    for ( auto const& out : n_.outputs_ )
    {
      for ( std::size_t k = 0; k < out.bits.size(); ++k )
      {
        if ( out.bits[k] == unconnected || n_.nets_[index( out.bits[k] )].source == net_source::undriven )
        {
          throw netlist_error( netlist_errc::floating_output,
                               "output bit " + out.name + "[" + std::to_string( k ) + "] is not driven" );
        }
      }
    }
    for ( auto const& g : n_.gates_ )
    {
      for ( auto in : g.inputs )
      {
        if ( n_.nets_[index( in )].source == net_source::undriven )
        {
          throw netlist_error( netlist_errc::floating_net, "gate " + std::to_string( g.id ) + " reads undriven net " +
                                                               n_.nets_[index( in )].name );
        }
      }
    }

    /* Kahn's algorithm over gates; the min-heap keeps ties in ascending id order */
    std::vector<std::uint32_t> pending( n_.gates_.size(), 0u );
    std::vector<std::vector<std::uint32_t>> readers( n_.nets_.size() );
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for ( auto const& g : n_.gates_ )
    {
      for ( auto in : g.inputs )
      {
        if ( n_.nets_[index( in )].source == net_source::gate )
        {
          ++pending[g.id];
          readers[index( in )].push_back( g.id );
        }
      }
      if ( pending[g.id] == 0u )
      {
        ready.push( g.id );
      }
    }
    n_.order_.clear();
    n_.order_.reserve( n_.gates_.size() );
    while ( !ready.empty() )
    {
      auto const gid = ready.top();
      ready.pop();
      n_.order_.push_back( gid );
      for ( auto r : readers[index( n_.gates_[gid].output )] )
      {
        if ( --pending[r] == 0u )
        {
          ready.push( r );
        }
      }
    }
    if ( n_.order_.size() != n_.gates_.size() )
    {
      throw netlist_error( netlist_errc::cycle, "combinational cycle detected in '" + n_.name_ + "'" );
    }

    finalized_ = true;
    return std::move( n_ );
  }

private:
  static constexpr net_id unconnected{ 0xffffffffu };

  void check_open() const
  {
    if ( finalized_ )
    {
      throw netlist_error( netlist_errc::finalized, "builder already finalized" );
    }
  }

  void check_net( net_id n ) const
  {
    if ( index( n ) >= n_.nets_.size() )
    {
      throw netlist_error( netlist_errc::unknown_net, "unknown net id " + std::to_string( index( n ) ) );
    }
  }

  void check_gate( gate_kind kind, std::span<const net_id> inputs ) const
  {
    check_open();
    if ( inputs.size() != arity( kind ) )
    {
      throw netlist_error( netlist_errc::arity, std::string( to_string( kind ) ) + " takes " +
                                                    std::to_string( arity( kind ) ) + " input(s), got " +
                                                    std::to_string( inputs.size() ) );
    }
    for ( auto n : inputs )
    {
      check_net( n );
    }
  }

  static void check_new_bus( const std::vector<bus>& buses, const std::string& bus_name )
  {
    if ( std::any_of( buses.begin(), buses.end(), [&]( auto const& b ) { return b.name == bus_name; } ) )
    {
      throw netlist_error( netlist_errc::duplicate_bus, "bus '" + bus_name + "' declared twice" );
    }
  }

  void connect( gate_kind kind, std::span<const net_id> inputs, net_id out )
  {
    auto const gid = static_cast<std::uint32_t>( n_.gates_.size() );
    n_.gates_.push_back( { gid, kind, { inputs.begin(), inputs.end() }, out } );
    n_.nets_[index( out )].source = net_source::gate;
    n_.nets_[index( out )].driver = gid;
  }

  netlist n_;
  bool finalized_{ false };
};

/*! \brief Longest input-to-output path counted in gates (unit-delay model). */
inline std::size_t critical_path_depth( const netlist& ntk )
{
  std::vector<std::size_t> depth( ntk.num_nets(), 0u );
  for ( auto gid : ntk.topological_order() )
  {
    auto const& g = ntk.gates()[gid];
    std::size_t d = 0;
    for ( auto in : g.inputs )
    {
      d = std::max( d, depth[index( in )] );
    }
    depth[index( g.output )] = d + 1u;
  }
  std::size_t result = 0;
  for ( auto const& out : ntk.outputs() )
  {
    for ( auto n : out.bits )
    {
      result = std::max( result, depth[index( n )] );
    }
  }
  return result;
}

struct gate_census
{
  std::map<gate_kind, std::size_t> by_kind;
  std::size_t total{ 0 };

  std::size_t count( gate_kind kind ) const
  {
    auto it = by_kind.find( kind );
    return it == by_kind.end() ? 0u : it->second;
  }

  gate_census& operator+=( const gate_census& other )
  {
    for ( auto const& [k, c] : other.by_kind )
    {
      by_kind[k] += c;
    }
    total += other.total;
    return *this;
  }

  friend bool operator==( const gate_census&, const gate_census& ) = default;
};

inline gate_census operator*( std::size_t times, gate_census c )
{
  for ( auto& [k, n] : c.by_kind )
  {
    n *= times;
  }
  c.total *= times;
  return c;
}

inline gate_census operator+( gate_census a, const gate_census& b )
{
  a += b;
  return a;
}

inline gate_census gate_counts( const netlist& ntk )
{
  gate_census c;
  for ( auto const& g : ntk.gates() )
  {
    ++c.by_kind[g.kind];
    ++c.total;
  }
  return c;
}

} // namespace vedic
