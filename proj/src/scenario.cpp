#include "linksim/scenario.hpp"

#include <cmath>
#include <string>

#include "linksim/errors.hpp"
#include "linksim/rng.hpp"

namespace linksim::scenario {
namespace {

constexpr std::uint64_t kSpotStream = 0;
constexpr double kRatioSlack = 1e-3;

std::uint64_t user_stream(int spot, int index_in_spot) {
  return (static_cast<std::uint64_t>(spot + 1) << 32) | static_cast<std::uint32_t>(index_in_spot);
}

void check(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError("scenario." + field + ": " + what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void ScenarioConfig::validate() const {
  check(positive(area_side_m), "area_side_m", "must be positive");
  check(positive(user_area_side_m), "user_area_side_m", "must be positive");
  check(user_area_side_m <= area_side_m, "user_area_side_m",
        "user area (" + std::to_string(user_area_side_m) + " m) does not fit inside the area (" +
            std::to_string(area_side_m) + " m)");
  check(n_user_spots == 2, "n_user_spots", "only the two-spot (rescuees/rescuers) layout is supported");
  check(n_users >= n_user_spots, "n_users", "must be >= n_user_spots");
  check(rescuer_ratio >= 1.0 / 3.0 - kRatioSlack && rescuer_ratio <= 2.0 / 3.0 + kRatioSlack,
        "rescuer_ratio", "must lie in [1/3, 2/3]");
  check(positive(uav_height_m), "uav_height_m", "must be positive");
  check(positive(user_height_m), "user_height_m", "must be positive");
  check(uav_height_m > user_height_m, "uav_height_m", "must exceed user_height_m");
  check(positive(bh_distance_m), "bh_distance_m", "must be positive");
  check(positive(access_freq_hz), "access_freq_hz", "must be positive");
  check(positive(access_bandwidth_hz), "access_bandwidth_hz", "must be positive");
  check(std::isfinite(ground_eirp_dbm), "ground_eirp_dbm", "must be finite");
  check(std::isfinite(uav_eirp_dbm), "uav_eirp_dbm", "must be finite");
  check(noise_figure_db >= 0.0 && std::isfinite(noise_figure_db), "noise_figure_db",
        "must be >= 0");
  check(packet_bits >= 0.0 && std::isfinite(packet_bits), "packet_bits", "must be >= 0");
  check(n_runs >= 1, "n_runs", "must be >= 1");
  if (uav_xy) {
    check(std::isfinite(uav_xy->first) && std::isfinite(uav_xy->second), "uav_xy_m",
          "must be finite");
  }
  check(rescuer_count() >= 1 && rescuee_count() >= 1, "n_users",
        "both spots need at least one user at this rescuer_ratio");
}

int ScenarioConfig::rescuer_count() const {
  // Round half up; the epsilon keeps 1/3 * 9 from landing on 2.999...
  return static_cast<int>(std::floor(rescuer_ratio * n_users + 0.5 + 1e-9));
}

ScenarioInstance sample_scenario(const ScenarioConfig& cfg, std::uint64_t run_index) {
  cfg.validate();
  const double half = cfg.user_area_side_m / 2.0;

  ScenarioInstance instance;
  StreamRng spot_rng(cfg.rng_seed, run_index, kSpotStream);
  for (int spot = 0; spot < cfg.n_user_spots; ++spot) {
    const double x = spot_rng.uniform(half, cfg.area_side_m - half);
    const double y = spot_rng.uniform(half, cfg.area_side_m - half);
    instance.spot_centers.push_back({x, y});
  }

  const auto place = [&](int spot, int count, UserKind kind) {
    const Point2 center = instance.spot_centers[static_cast<std::size_t>(spot)];
    for (int k = 0; k < count; ++k) {
      StreamRng rng(cfg.rng_seed, run_index, user_stream(spot, k));
      const double x = rng.uniform(center.x - half, center.x + half);
      const double y = rng.uniform(center.y - half, center.y + half);
      instance.users.push_back({{x, y}, kind, spot});
    }
  };
  place(0, cfg.rescuee_count(), UserKind::Rescuee);
  place(1, cfg.rescuer_count(), UserKind::Rescuer);

  if (cfg.uav_xy) {
    instance.uav_position = {cfg.uav_xy->first, cfg.uav_xy->second, cfg.uav_height_m};
  } else {
    const Point2& a = instance.spot_centers[0];
    const Point2& b = instance.spot_centers[1];
    instance.uav_position = {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0, cfg.uav_height_m};
  }
  return instance;
}

double slant_distance(const Point3& uav_position, const Point2& user_position,
                      double user_height_m) {
  const double dx = uav_position.x - user_position.x;
  const double dy = uav_position.y - user_position.y;
  const double dz = uav_position.z - user_height_m;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace linksim::scenario
