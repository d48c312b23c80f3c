#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linksim/architecture.hpp"
#include "linksim/combo.hpp"
#include "linksim/linktech.hpp"
#include "linksim/scenario.hpp"

// Monte Carlo engine. Runs are independent work items; the parallel path
// spreads them over OpenMP threads and the serial path is kept as the
// reference it must match bit for bit.

namespace linksim::evaluator {

/// Everything a run needs: scenario plus one spec per technology and one
/// profile per architecture.
struct SimulationSetup {
  scenario::ScenarioConfig scenario;
  std::array<linktech::BhTechnologySpec, 5> technologies = {
      linktech::Sub6Siso{}, linktech::Sub6Mimo2x2{}, linktech::Sub6MassiveMimo{},
      linktech::Fso{}, linktech::MmWave{}};
  std::array<architecture::ArchitectureProfile, 3> profiles = {
      architecture::default_profile(ArchitectureKind::Relay),
      architecture::default_profile(ArchitectureKind::FlyingBs),
      architecture::default_profile(ArchitectureKind::FlyingRrh)};

  const linktech::BhTechnologySpec& technology(TechnologyKind kind) const {
    return technologies[static_cast<std::size_t>(kind)];
  }
  const architecture::ArchitectureProfile& profile(ArchitectureKind kind) const {
    return profiles[static_cast<std::size_t>(kind)];
  }

  /// Validates scenario, technologies and profiles.
  void validate() const;
};

/// Run index offset used for the single resample after a two-ray null.
inline constexpr std::uint64_t kResampleStride = 1ULL << 40;

struct RunMetrics {
  std::uint64_t run_index = 0;
  double bh_rate_bps = 0.0;       // technology capacity at the BH distance
  double bh_cap_bps = 0.0;        // what the architecture can push through it
  double aggregate_access_bps = 0.0;
  double delivered_rate_bps = 0.0;
  double per_user_rate_bps = 0.0;  // delivered / n_users
  double total_latency_s = 0.0;    // mean over users
  bool resampled = false;
};

struct MetricStats {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation, 0 when n == 1
  double ci95_half_width = 0.0;
  std::size_t n_samples = 0;
};

/// Two-pass mean and sample standard deviation, summed in input order.
MetricStats summarize(std::span<const double> values);

struct RunStatistics {
  MetricStats bh_rate;
  MetricStats aggregate_access;
  MetricStats delivered_rate;
  MetricStats total_latency;
};

struct ComboResult {
  ComboId id;
  RunStatistics stats;
  std::vector<RunMetrics> runs;  // in run_index order
  double payload_weight_kg = 0.0;
};

struct ExecutionPolicy {
  int threads = 0;  // 0: OpenMP default
};

/// Metrics for one geometry; exposed so tests can recompute a run by hand.
/// Throws TwoRayNullError if any user sits on a null.
RunMetrics evaluate_geometry(const SimulationSetup& setup, ComboId combo,
                             const scenario::ScenarioInstance& instance);

/// One Monte Carlo draw. A two-ray null triggers a single resample at
/// run_index + kResampleStride; a second null throws EvaluationError.
RunMetrics evaluate_run(const SimulationSetup& setup, ComboId combo, std::uint64_t run_index);

/// n_runs draws per combo, results aligned with `combos` (duplicates allowed).
std::vector<ComboResult> evaluate_all(const SimulationSetup& setup,
                                      std::span<const ComboId> combos,
                                      ExecutionPolicy policy = {});

/// Single-threaded reference for evaluate_all.
std::vector<ComboResult> evaluate_all_serial(const SimulationSetup& setup,
                                             std::span<const ComboId> combos);

struct SweepPoint {
  int n_users = 0;
  MetricStats latency;
};

struct SweepSeries {
  ComboId id;
  std::vector<SweepPoint> points;  // same order as the requested counts
};

std::vector<SweepSeries> sweep_users(const SimulationSetup& setup,
                                     std::span<const ComboId> combos,
                                     std::span<const int> user_counts,
                                     ExecutionPolicy policy = {});

}  // namespace linksim::evaluator
