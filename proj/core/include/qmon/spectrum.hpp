#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmon/errors.hpp"

namespace qmon {

enum class BandKind { quantum, service };

const char* to_string(BandKind band);

/// Contiguous spectral region carrying one class of signal.
struct Band {
  BandKind kind = BandKind::quantum;
  double lower_nm = 0.0;
  double upper_nm = 0.0;

  double width_nm() const { return upper_nm - lower_nm; }
};

/// Slice of a band assigned to one access network.
struct Subband {
  BandKind band = BandKind::quantum;
  int access_network = 0;
  double lower_nm = 0.0;
  double upper_nm = 0.0;

  double passband_nm() const { return upper_nm - lower_nm; }
  bool contains(double nm) const { return nm > lower_nm && nm < upper_nm; }
};

/// One wavelength slot inside a subband. `index` runs 1..M and doubles as the
/// AWG output port the channel exits through (same periodic set).
struct Channel {
  BandKind band = BandKind::quantum;
  int access_network = 0;
  int index = 0;
  double center_nm = 0.0;
  double spacing_ghz = 0.0;

  double center_ghz() const;
};

bool same_channel(const Channel& a, const Channel& b);

/// Idealized cyclic AWG: a channel k grid positions above the anchor exits
/// port ((k mod num_ports) + 1). The anchor is the plan's first quantum channel.
struct AwgSpec {
  int num_ports = 32;
  double grid_spacing_ghz = 100.0;
};

struct PlanConfig {
  int access_networks = 3;
  Band quantum_band{BandKind::quantum, 1280.0, 1340.0};
  Band service_band{BandKind::service, 1520.0, 1580.0};
  /// 0 means "tile the band": band width / access_networks.
  double subband_width_nm = 0.0;
  double grid_spacing_ghz = 100.0;
  int awg_ports = 32;
  /// Filter passband actually usable inside a subband (caps the user count).
  double usable_passband_nm = 13.0;
  double min_band_gap_nm = 150.0;
  double reference_wavelength_nm = 1550.0;
};

/// The full wavelength layout: bands, per-access-network subband pairs, the
/// channel grid and the quantum<->service pairing that implements addressing.
/// Immutable after construction; safe for concurrent reads.
class ChannelPlan {
 public:
  static ChannelPlan build(const PlanConfig& config);

  const PlanConfig& config() const { return config_; }
  const Band& band(BandKind kind) const;
  const AwgSpec& awg() const { return awg_; }
  int num_access_networks() const { return config_.access_networks; }
  int ports() const { return awg_.num_ports; }

  std::span<const Subband> subbands(BandKind kind) const;
  const Subband& subband(BandKind kind, int access_network) const;

  /// All channels in global grid order: quantum band ascending wavelength,
  /// then service band ascending wavelength.
  std::span<const Channel> channels() const { return channels_; }
  const Channel& channel(BandKind band, int access_network, int index) const;
  /// Channel at a global grid position, or nullptr when out of range.
  const Channel* channel_at(std::size_t grid_position) const;
  std::size_t grid_position(const Channel& ch) const;

  int awg_port(const Channel& ch) const;
  const Channel& paired_service_channel(const Channel& quantum) const;
  const Channel& paired_quantum_channel(const Channel& service) const;
  std::pair<Channel, Channel> channel_for_address(int access_network, int device_port) const;

  /// Grid spacing actually realized inside a subband; equals the configured
  /// spacing unless M channels do not fit the subband's frequency width.
  double effective_spacing_ghz(BandKind band, int access_network) const;

  /// Closed-form user limit: subbands per band times usable passband over the
  /// channel spacing in nm at the reference wavelength.
  int capacity() const;

 private:
  ChannelPlan() = default;

  const Channel& lookup(const Channel& ch) const;

  PlanConfig config_;
  AwgSpec awg_;
  std::vector<Subband> quantum_subbands_;
  std::vector<Subband> service_subbands_;
  std::vector<Channel> channels_;
};

/// Convenience wrapper matching the operation name used throughout the docs.
ChannelPlan build_channel_plan(const PlanConfig& config);

}  // namespace qmon
