#pragma once

#include <cmath>

namespace qmon {

/// Speed of light expressed in nm*GHz, so that f[GHz] = kLightSpeedNmGhz / lambda[nm].
inline constexpr double kLightSpeedNmGhz = 2.99792458e8;

inline double frequency_ghz(double wavelength_nm) {
  return kLightSpeedNmGhz / wavelength_nm;
}

inline double wavelength_nm(double freq_ghz) {
  return kLightSpeedNmGhz / freq_ghz;
}

/// Width of a frequency step expressed in nm at the given wavelength.
inline double spacing_nm_at(double wavelength_nm, double spacing_ghz) {
  return wavelength_nm * wavelength_nm * spacing_ghz / kLightSpeedNmGhz;
}

inline double db_to_transmittance(double loss_db) {
  return std::pow(10.0, -loss_db / 10.0);
}

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

inline double round_decimals(double value, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(value * scale) / scale;
}

}  // namespace qmon
