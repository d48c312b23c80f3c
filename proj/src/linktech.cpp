#include "linksim/linktech.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "linksim/channel.hpp"
#include "linksim/errors.hpp"

namespace linksim::linktech {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }
bool unit_interval(double v) { return v > 0.0 && v <= 1.0; }

void check_rate_inputs(double bandwidth_hz, double snr_linear) {
  require(positive(bandwidth_hz), "bandwidth_hz must be positive");
  require(snr_linear >= 0.0 && !std::isnan(snr_linear), "snr must be >= 0");
}

}  // namespace

TechnologyKind kind_of(const BhTechnologySpec& spec) {
  return static_cast<TechnologyKind>(spec.index());
}

BhTechnologySpec default_spec(TechnologyKind kind) {
  switch (kind) {
    case TechnologyKind::Sub6Siso: return Sub6Siso{};
    case TechnologyKind::Sub6Mimo2x2: return Sub6Mimo2x2{};
    case TechnologyKind::Sub6MassiveMimo: return Sub6MassiveMimo{};
    case TechnologyKind::Fso: return Fso{};
    case TechnologyKind::MmWave: return MmWave{};
  }
  throw DomainError("unknown technology kind");
}

std::string_view tag(TechnologyKind kind) {
  switch (kind) {
    case TechnologyKind::Sub6Siso: return "siso";
    case TechnologyKind::Sub6Mimo2x2: return "mimo2x2";
    case TechnologyKind::Sub6MassiveMimo: return "massive-mimo";
    case TechnologyKind::Fso: return "fso";
    case TechnologyKind::MmWave: return "mmwave";
  }
  return "?";
}

std::optional<TechnologyKind> parse_technology(std::string_view text) {
  for (TechnologyKind kind : kAllTechnologies) {
    if (tag(kind) == text) return kind;
  }
  return std::nullopt;
}

void validate(const BhTechnologySpec& spec) {
  std::visit(
      Overloaded{
          [](const Sub6Siso& s) {
            require(positive(s.bandwidth_hz), "siso.bandwidth_hz must be positive");
            require(positive(s.carrier_hz), "siso.carrier_hz must be positive");
          },
          [](const Sub6Mimo2x2& s) {
            require(positive(s.bandwidth_hz), "mimo2x2.bandwidth_hz must be positive");
            require(positive(s.carrier_hz), "mimo2x2.carrier_hz must be positive");
          },
          [](const Sub6MassiveMimo& s) {
            require(positive(s.bandwidth_hz), "massive-mimo.bandwidth_hz must be positive");
            require(positive(s.carrier_hz), "massive-mimo.carrier_hz must be positive");
            require(s.k_streams >= 1, "massive-mimo.k_streams must be >= 1");
            require(s.m_antennas >= s.k_streams, "massive-mimo requires m_antennas >= k_streams");
            require(s.coherence_symbols > s.k_streams,
                    "massive-mimo requires coherence_symbols > k_streams");
            require(unit_interval(s.csi_quality), "massive-mimo.csi_quality must be in (0, 1]");
          },
          [](const Fso& s) {
            require(positive(s.tx_power_w), "fso.tx_power_w must be positive");
            require(unit_interval(s.eta_t), "fso.eta_t must be in (0, 1]");
            require(unit_interval(s.eta_r), "fso.eta_r must be in (0, 1]");
            require(s.pol_loss_db >= 0.0 && std::isfinite(s.pol_loss_db),
                    "fso.pol_loss_db must be >= 0");
            require(s.atm_loss_db_per_km >= 0.0 && std::isfinite(s.atm_loss_db_per_km),
                    "fso.atm_loss_db_per_km must be >= 0");
            require(positive(s.wavelength_m), "fso.wavelength_m must be positive");
            require(positive(s.rx_aperture_area_m2), "fso.rx_aperture_area_m2 must be positive");
            require(positive(s.beam_divergence_rad), "fso.beam_divergence_rad must be positive");
            require(s.photons_per_bit >= 1.0 && std::isfinite(s.photons_per_bit),
                    "fso.photons_per_bit must be >= 1");
          },
          [](const MmWave& s) {
            require(positive(s.bandwidth_hz), "mmwave.bandwidth_hz must be positive");
            require(positive(s.carrier_hz), "mmwave.carrier_hz must be positive");
          },
      },
      spec);
}

double capacity_sub6_siso(double bandwidth_hz, double snr_linear) {
  check_rate_inputs(bandwidth_hz, snr_linear);
  return bandwidth_hz * std::log2(1.0 + snr_linear);
}

double capacity_sub6_mimo2x2(double bandwidth_hz, double snr_linear) {
  return 2.0 * capacity_sub6_siso(bandwidth_hz, snr_linear);
}

double capacity_massive_mimo(const Sub6MassiveMimo& spec, double snr_linear) {
  if (spec.k_streams >= spec.coherence_symbols) {
    throw DomainError("massive MIMO pilot overhead: k_streams must be < coherence_symbols");
  }
  validate(spec);
  check_rate_inputs(spec.bandwidth_hz, snr_linear);
  const double k = spec.k_streams;
  const double overhead = 1.0 - k / spec.coherence_symbols;
  const double sinr = spec.csi_quality * spec.m_antennas * snr_linear / (k * snr_linear + 1.0);
  return spec.bandwidth_hz * k * overhead * std::log2(1.0 + sinr);
}

double capacity_fso(const Fso& spec, double distance_m) {
  validate(spec);
  require(positive(distance_m), "fso distance_m must be positive");

  const double beam_radius = spec.beam_divergence_rad * distance_m / 2.0;
  const double beam_area = std::numbers::pi * beam_radius * beam_radius;
  const double photon_energy = kPlanckConstant * channel::kSpeedOfLight / spec.wavelength_m;
  const double atm_loss_db = spec.atm_loss_db_per_km * (distance_m / 1000.0);
  // Near field: the receiver cannot collect more than the whole beam.
  const double collected_fraction = std::min(spec.rx_aperture_area_m2 / beam_area, 1.0);

  const double rx_power_w = spec.tx_power_w * spec.eta_r * spec.eta_t *
                            std::pow(10.0, -spec.pol_loss_db / 10.0) *
                            std::pow(10.0, -atm_loss_db / 10.0) * collected_fraction;
  return rx_power_w / (photon_energy * spec.photons_per_bit);
}

double capacity_mmwave(double bandwidth_hz, double snr_linear) {
  return capacity_sub6_siso(bandwidth_hz, snr_linear);
}

double backhaul_snr(double carrier_hz, double bandwidth_hz, const BhLinkContext& link) {
  const double loss = channel::free_space_path_loss(carrier_hz, link.distance_m);
  return channel::snr_linear(link.eirp_dbm, loss, bandwidth_hz, link.noise_figure_db);
}

double backhaul_capacity(const BhTechnologySpec& spec, const BhLinkContext& link) {
  return std::visit(
      Overloaded{
          [&](const Sub6Siso& s) {
            return capacity_sub6_siso(s.bandwidth_hz,
                                      backhaul_snr(s.carrier_hz, s.bandwidth_hz, link));
          },
          [&](const Sub6Mimo2x2& s) {
            return capacity_sub6_mimo2x2(s.bandwidth_hz,
                                         backhaul_snr(s.carrier_hz, s.bandwidth_hz, link));
          },
          [&](const Sub6MassiveMimo& s) {
            return capacity_massive_mimo(s, backhaul_snr(s.carrier_hz, s.bandwidth_hz, link));
          },
          [&](const Fso& s) { return capacity_fso(s, link.distance_m); },
          [&](const MmWave& s) {
            return capacity_mmwave(s.bandwidth_hz,
                                   backhaul_snr(s.carrier_hz, s.bandwidth_hz, link));
          },
      },
      spec);
}

}  // namespace linksim::linktech
