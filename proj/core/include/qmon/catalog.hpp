#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qmon/errors.hpp"
#include "qmon/spectrum.hpp"

namespace qmon {

enum class ComponentKind {
  fiber,
  connector_pair,
  splitter_1x2,
  splitter_1x32,
  switch_crossbar,
  circulator,
  cwdm_filter,
  wdm_mux_1310_1550,
  awg_32ch,
};

const char* to_string(ComponentKind kind);

/// Per-band insertion loss of a catalog component. Fiber is per km, all other
/// kinds are flat per traversal.
struct ComponentSpec {
  ComponentKind kind = ComponentKind::fiber;
  double loss_db_quantum = 0.0;
  double loss_db_service = 0.0;
  bool per_km = false;

  double loss_db(BandKind band) const {
    return band == BandKind::quantum ? loss_db_quantum : loss_db_service;
  }
};

enum class OadmRoleKind { add, pass, drop };

const char* to_string(OadmRoleKind role);

struct OadmRole {
  OadmRoleKind role = OadmRoleKind::add;
  BandKind band = BandKind::quantum;
};

/// Composite add/drop node built from catalog parts. The composite losses are
/// derived from the constituent signal paths:
///   add  = mux + circulator + mux + splitter(add arm)
///   pass = 2 x filter(express) + splitter(pass arm)
///   drop(quantum) = filter(drop) + circulator + mux
///   drop(service) = filter(express) + filter(drop) + circulator + mux
/// A measured profile may override any composite directly.
struct OadmModel {
  double filter_drop_loss_db = 0.4;
  double filter_express_loss_db = 0.6;
  double circulator_loss_db = 0.8;
  double mux_loss_db = 0.5;
  double splitter_add_loss_db = 3.6;
  double splitter_pass_loss_db = 3.6;
  // [role][band] composite overrides, role in {add, pass, drop}.
  std::array<std::array<std::optional<double>, 2>, 3> composite_override_db{};
};

double oadm_loss(const OadmModel& model, OadmRole role);

/// Component library; two built-in profiles plus JSON-loaded ones.
class Catalog {
 public:
  static Catalog table1_nominal();
  static Catalog prototype_measured();
  /// Resolve a built-in profile by name ("table1-nominal", "prototype-measured").
  static Catalog builtin(const std::string& name);

  const std::string& name() const { return name_; }
  const std::vector<ComponentSpec>& components() const { return components_; }
  const ComponentSpec& component(ComponentKind kind) const;
  double loss_db(ComponentKind kind, BandKind band) const;
  double fiber_loss_db(BandKind band, double length_km) const;

  const OadmModel& oadm() const { return oadm_; }
  OadmModel& oadm() { return oadm_; }
  double oadm_role_loss(OadmRoleKind role, BandKind band) const {
    return oadm_loss(oadm_, OadmRole{role, band});
  }

  void set_component(const ComponentSpec& spec);
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::string name_;
  std::vector<ComponentSpec> components_;
  OadmModel oadm_;
};

}  // namespace qmon
