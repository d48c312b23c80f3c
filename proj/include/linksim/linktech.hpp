#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

// Downlink capacity of the five backhaul/fronthaul technologies.

namespace linksim::linktech {

inline constexpr double kPlanckConstant = 6.626'070'15e-34;  // J s

enum class TechnologyKind { Sub6Siso, Sub6Mimo2x2, Sub6MassiveMimo, Fso, MmWave };

inline constexpr std::array<TechnologyKind, 5> kAllTechnologies = {
    TechnologyKind::Sub6Siso, TechnologyKind::Sub6Mimo2x2, TechnologyKind::Sub6MassiveMimo,
    TechnologyKind::Fso, TechnologyKind::MmWave};

struct Sub6Siso {
  double bandwidth_hz = 20e6;
  double carrier_hz = 2.6e9;
};

struct Sub6Mimo2x2 {
  double bandwidth_hz = 20e6;
  double carrier_hz = 2.6e9;
};

struct Sub6MassiveMimo {
  double bandwidth_hz = 20e6;
  double carrier_hz = 2.6e9;
  int m_antennas = 64;
  int k_streams = 1;
  int coherence_symbols = 200;  // tau
  double csi_quality = 1.0;     // c_csi in (0, 1]
};

struct Fso {
  double tx_power_w = 0.1;
  double eta_t = 0.8;
  double eta_r = 0.8;
  double pol_loss_db = 3.0;  // polarization + pointing/vibration aggregate
  double atm_loss_db_per_km = 0.43;
  double wavelength_m = 1550e-9;
  double rx_aperture_area_m2 = 0.0314;
  double beam_divergence_rad = 1e-3;
  double photons_per_bit = 100.0;
};

struct MmWave {
  double bandwidth_hz = 400e6;
  double carrier_hz = 28e9;
};

using BhTechnologySpec = std::variant<Sub6Siso, Sub6Mimo2x2, Sub6MassiveMimo, Fso, MmWave>;

TechnologyKind kind_of(const BhTechnologySpec& spec);
BhTechnologySpec default_spec(TechnologyKind kind);

/// Short tag used in CLI flags and CSV output: siso, mimo2x2, massive-mimo, fso, mmwave.
std::string_view tag(TechnologyKind kind);
std::optional<TechnologyKind> parse_technology(std::string_view tag);

/// Throws DomainError when a type invariant does not hold.
void validate(const BhTechnologySpec& spec);

double capacity_sub6_siso(double bandwidth_hz, double snr_linear);
double capacity_sub6_mimo2x2(double bandwidth_hz, double snr_linear);
double capacity_massive_mimo(const Sub6MassiveMimo& spec, double snr_linear);
double capacity_fso(const Fso& spec, double distance_m);
double capacity_mmwave(double bandwidth_hz, double snr_linear);

/// Radio side of a shore-to-UAV link. FSO ignores everything but distance.
struct BhLinkContext {
  double eirp_dbm = 43.0;
  double noise_figure_db = 5.0;
  double distance_m = 50'000.0;
};

/// SNR of a radio backhaul over a free-space LOS path.
double backhaul_snr(double carrier_hz, double bandwidth_hz, const BhLinkContext& link);

/// Capacity in bit/s of `spec` over `link`.
double backhaul_capacity(const BhTechnologySpec& spec, const BhLinkContext& link);

}  // namespace linksim::linktech
