#include "linksim/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "linksim/errors.hpp"

namespace linksim::channel {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw DomainError(msg.str());
  }
}

}  // namespace

void RadioLinkGeometry::validate() const {
  require_positive(frequency_hz, "frequency_hz");
  require_positive(distance_m, "distance_m");
  require_positive(tx_height_m, "tx_height_m");
  require_positive(rx_height_m, "rx_height_m");
}

double two_ray_path_loss(const RadioLinkGeometry& geom) {
  geom.validate();
  const double lambda = geom.wavelength_m();
  const double phase =
      2.0 * std::numbers::pi * geom.tx_height_m * geom.rx_height_m / (lambda * geom.distance_m);
  const double interference = std::sin(phase);

  if (std::abs(interference) < kTwoRayNullThreshold) {
    // Nulls sit at d_k = 2 ht hr / (k lambda).
    const double k = std::round(phase / std::numbers::pi);
    const double null_m = k >= 1.0 ? 2.0 * geom.tx_height_m * geom.rx_height_m / (k * lambda)
                                   : std::numeric_limits<double>::infinity();
    std::ostringstream msg;
    msg.precision(12);
    msg << "two-ray destructive null at d=" << geom.distance_m << " m (null order " << k
        << " at " << null_m << " m, f=" << geom.frequency_hz << " Hz, ht=" << geom.tx_height_m
        << " m, hr=" << geom.rx_height_m << " m)";
    throw TwoRayNullError(msg.str(), geom.distance_m, null_m);
  }

  // A negative sine only flips the sign of the field amplitude; the power
  // loss uses its magnitude.
  const double free_space_factor = lambda / (4.0 * std::numbers::pi * geom.distance_m);
  return -20.0 * std::log10(free_space_factor * 2.0 * std::abs(interference));
}

double two_ray_breakpoint_m(const RadioLinkGeometry& geom) {
  return 4.0 * std::numbers::pi * geom.tx_height_m * geom.rx_height_m / geom.wavelength_m();
}

double free_space_path_loss(double frequency_hz, double distance_m) {
  require_positive(frequency_hz, "frequency_hz");
  require_positive(distance_m, "distance_m");
  const double lambda = kSpeedOfLight / frequency_hz;
  return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m / lambda);
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
  require_positive(bandwidth_hz, "bandwidth_hz");
  if (!(noise_figure_db >= 0.0) || !std::isfinite(noise_figure_db)) {
    throw DomainError("noise_figure_db must be finite and >= 0");
  }
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double snr_linear(double eirp_dbm, double path_loss_db, double bandwidth_hz,
                  double noise_figure_db) {
  const double snr_db = eirp_dbm - path_loss_db - noise_power_dbm(bandwidth_hz, noise_figure_db);
  return std::pow(10.0, snr_db / 10.0);
}

LinkBudget make_link_budget(double eirp_dbm, double path_loss_db, double bandwidth_hz,
                            double noise_figure_db) {
  LinkBudget budget;
  budget.eirp_dbm = eirp_dbm;
  budget.path_loss_db = path_loss_db;
  budget.noise_figure_db = noise_figure_db;
  budget.bandwidth_hz = bandwidth_hz;
  budget.rx_power_dbm = eirp_dbm - path_loss_db;
  budget.snr_db = budget.rx_power_dbm - noise_power_dbm(bandwidth_hz, noise_figure_db);
  return budget;
}

}  // namespace linksim::channel
