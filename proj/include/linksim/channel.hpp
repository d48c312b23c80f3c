#pragma once

// Propagation and link-budget primitives for the air-to-sea access link and
// the shore-to-UAV backhaul/fronthaul link. All functions are pure.

namespace linksim::channel {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kThermalNoiseDbmPerHz = -174.0;
inline constexpr double kDefaultNoiseFigureDb = 5.0;

/// |sin| below this is treated as an exact two-ray null.
inline constexpr double kTwoRayNullThreshold = 1e-12;

struct RadioLinkGeometry {
  double frequency_hz = 0.0;
  double distance_m = 0.0;  // 3-D slant distance
  double tx_height_m = 0.0;
  double rx_height_m = 0.0;

  double wavelength_m() const { return kSpeedOfLight / frequency_hz; }
  /// Throws DomainError unless every field is strictly positive and finite.
  void validate() const;
};

struct LinkBudget {
  double eirp_dbm = 0.0;
  double path_loss_db = 0.0;
  double noise_figure_db = kDefaultNoiseFigureDb;
  double bandwidth_hz = 0.0;
  double rx_power_dbm = 0.0;
  double snr_db = 0.0;
};

/// Two-ray over-sea path loss in dB for a smooth surface with reflection
/// coefficient -1:
///   L(d) = -20 log10( lambda/(4 pi d) * |2 sin(2 pi ht hr / (lambda d))| )
/// Can be negative at short range. Throws TwoRayNullError at an exact null.
double two_ray_path_loss(const RadioLinkGeometry& geom);

/// Distance 4 pi ht hr / lambda beyond which the two-ray loss follows the
/// 40 log10(d) slope.
double two_ray_breakpoint_m(const RadioLinkGeometry& geom);

/// Friis free-space loss 20 log10(4 pi d / lambda).
double free_space_path_loss(double frequency_hz, double distance_m);

/// -174 dBm/Hz + 10 log10(B) + NF.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

double snr_linear(double eirp_dbm, double path_loss_db, double bandwidth_hz,
                  double noise_figure_db);

LinkBudget make_link_budget(double eirp_dbm, double path_loss_db, double bandwidth_hz,
                            double noise_figure_db);

}  // namespace linksim::channel
