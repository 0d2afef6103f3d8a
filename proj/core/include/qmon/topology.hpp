#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmon/catalog.hpp"
#include "qmon/errors.hpp"

namespace qmon {

using NodeId = std::string;

enum class DeviceRole { emitter, receiver, transceiver };

const char* to_string(DeviceRole role);

struct SwitchSpec {
  NodeId id;
  int ports = 32;
  /// Pairs of AWG-side ports patched together to form local return loops
  /// ("larger switch" construction for same-access-network links).
  std::vector<std::pair<int, int>> loopback_pairs;

  bool operator==(const SwitchSpec&) const = default;
};

struct AccessNetworkSpec {
  int index = 0;
  NodeId oadm;
  NodeId awg;
  int awg_ports = 32;
  std::optional<SwitchSpec> crossbar;
  /// Feeder fiber between the OADM drop/add port and the AWG common port.
  double feeder_km = 0.0;

  bool operator==(const AccessNetworkSpec&) const = default;
};

struct DeviceSpec {
  NodeId id;
  DeviceRole role = DeviceRole::transceiver;
  int access_network = 0;
  /// Assigned AWG output port; doubles as the device's wavelength address.
  int port = 0;
  double fiber_km = 0.0;
  /// Second switch connection, allowing simultaneous forward and return use.
  bool dual_fiber = false;

  bool operator==(const DeviceSpec&) const = default;
};

struct FiberSpanSpec {
  NodeId from;
  NodeId to;
  double length_km = 0.0;

  bool operator==(const FiberSpanSpec&) const = default;
};

/// Declarative network description, 1:1 with the topology JSON file.
struct TopologySpec {
  std::vector<NodeId> ring;
  std::vector<AccessNetworkSpec> access_networks;
  std::vector<DeviceSpec> devices;
  std::vector<FiberSpanSpec> fiber_spans;

  bool operator==(const TopologySpec&) const = default;
};

struct RingStep {
  NodeId oadm;
  OadmRoleKind role = OadmRoleKind::pass;
  int access_network = 0;  // 0 when the OADM backs no access network
};

/// Validated network: a directed OADM ring with WDM-PON access trees hanging
/// off it. Immutable after build.
class Topology {
 public:
  static Topology build(const TopologySpec& spec);

  const TopologySpec& spec() const { return spec_; }
  int ring_size() const { return static_cast<int>(spec_.ring.size()); }
  std::span<const NodeId> ring() const { return spec_.ring; }

  bool has_access_network(int index) const;
  const AccessNetworkSpec& access_network(int index) const;
  std::span<const AccessNetworkSpec> access_networks() const { return spec_.access_networks; }

  bool has_device(const NodeId& id) const;
  const DeviceSpec& device(const NodeId& id) const;
  std::span<const DeviceSpec> devices() const { return spec_.devices; }

  /// Length of the directed ring segment leaving `from_oadm`.
  double ring_segment_km(const NodeId& from_oadm) const;
  double total_fiber_km() const;

  /// The unique directed ring walk between two access networks' OADMs,
  /// including source (add), intermediates (pass) and destination (drop).
  std::vector<RingStep> ring_traversal(int from_an, int to_an) const;
  /// Number of directed ring hops from one access network's OADM to another's.
  int ring_hops(int from_an, int to_an) const;

 private:
  Topology() = default;

  int ring_index(const NodeId& oadm) const;

  TopologySpec spec_;
};

Topology build_topology(const TopologySpec& spec);

/// The three-access-network test-bed layout: ring segments 4.5/4.5/0.5 km,
/// feeders 6.0/0.0/0.5 km (16 km of fiber in total), no switches, one emitter
/// on access network 1 and one receiver on access network 3, both at port 1.
TopologySpec prototype_topology_spec();

/// Uniform ring used by tests and benchmarks: `ans` access networks, all
/// segments `segment_km` long, `ports`-port AWGs, optional per-AN crossbar.
TopologySpec uniform_ring_spec(int ans, int ports, bool with_switches, double segment_km = 1.0);

}  // namespace qmon
