#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Maritime search-and-rescue geometry: a square operations area, two square
// user spots (rescuees and rescuers) and one hovering UAV.

namespace linksim::scenario {

struct ScenarioConfig {
  double area_side_m = 1000.0;
  double user_area_side_m = 100.0;
  int n_user_spots = 2;
  int n_users = 6;
  double rescuer_ratio = 1.0 / 3.0;
  double uav_height_m = 200.0;
  double user_height_m = 2.0;
  double bh_distance_m = 50'000.0;
  double access_freq_hz = 2.6e9;
  double access_bandwidth_hz = 20e6;
  double ground_eirp_dbm = 43.0;
  double uav_eirp_dbm = 20.0;
  double noise_figure_db = 5.0;
  double packet_bits = 12'000.0;
  int n_runs = 100;
  std::uint64_t rng_seed = 1;
  /// Horizontal UAV position; defaults to the midpoint of the spot centers.
  std::optional<std::pair<double, double>> uav_xy;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// round-half-up(rescuer_ratio * n_users)
  int rescuer_count() const;
  int rescuee_count() const { return n_users - rescuer_count(); }
};

enum class UserKind { Rescuee, Rescuer };

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  bool operator==(const Point3&) const = default;
};

struct UserPosition {
  Point2 position;
  UserKind kind = UserKind::Rescuee;
  int spot = 0;
  bool operator==(const UserPosition&) const = default;
};

struct ScenarioInstance {
  std::vector<Point2> spot_centers;
  std::vector<UserPosition> users;  // rescuees (spot 0) first, then rescuers (spot 1)
  Point3 uav_position;
  bool operator==(const ScenarioInstance&) const = default;
};

/// Deterministic in (cfg.rng_seed, run_index). Every user draws from its own
/// stream keyed by (spot, index within spot), so growing n_users only appends
/// users and leaves the existing ones in place.
ScenarioInstance sample_scenario(const ScenarioConfig& cfg, std::uint64_t run_index);

double slant_distance(const Point3& uav_position, const Point2& user_position,
                      double user_height_m);

}  // namespace linksim::scenario
