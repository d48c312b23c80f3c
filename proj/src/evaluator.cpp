#include "linksim/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>

#include <omp.h>

#include "linksim/channel.hpp"
#include "linksim/errors.hpp"

namespace linksim::evaluator {
namespace {

constexpr double kCi95Z = 1.96;

std::string run_label(ComboId combo, std::uint64_t run_index) {
  return "combo " + to_string(combo) + " run " + std::to_string(run_index);
}

std::vector<ComboResult> assemble(const SimulationSetup& setup, std::span<const ComboId> combos,
                                  std::vector<RunMetrics>&& runs) {
  const auto n_runs = static_cast<std::size_t>(setup.scenario.n_runs);
  std::vector<ComboResult> results;
  results.reserve(combos.size());
  std::vector<double> column(n_runs);

  for (std::size_t c = 0; c < combos.size(); ++c) {
    ComboResult result;
    result.id = combos[c];
    result.payload_weight_kg = setup.profile(combos[c].architecture).payload_weight_kg;
    const auto first = runs.begin() + static_cast<std::ptrdiff_t>(c * n_runs);
    result.runs.assign(std::make_move_iterator(first),
                       std::make_move_iterator(first + static_cast<std::ptrdiff_t>(n_runs)));

    const auto stats_of = [&](double RunMetrics::*field) {
      for (std::size_t r = 0; r < n_runs; ++r) column[r] = result.runs[r].*field;
      return summarize(column);
    };
    result.stats.bh_rate = stats_of(&RunMetrics::bh_rate_bps);
    result.stats.aggregate_access = stats_of(&RunMetrics::aggregate_access_bps);
    result.stats.delivered_rate = stats_of(&RunMetrics::delivered_rate_bps);
    result.stats.total_latency = stats_of(&RunMetrics::total_latency_s);
    results.push_back(std::move(result));
  }
  return results;
}

void require_combos(std::span<const ComboId> combos) {
  if (combos.empty()) throw DomainError("evaluate_all: combo list is empty");
}

}  // namespace

void SimulationSetup::validate() const {
  scenario.validate();
  for (std::size_t i = 0; i < technologies.size(); ++i) {
    if (linktech::kind_of(technologies[i]) != static_cast<TechnologyKind>(i)) {
      throw ConfigError("technologies: slot order does not match technology tags");
    }
    try {
      linktech::validate(technologies[i]);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("technologies.") + e.what());
    }
  }
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].kind != static_cast<ArchitectureKind>(i)) {
      throw ConfigError("architectures: slot order does not match architecture tags");
    }
    try {
      profiles[i].validate();
    } catch (const DomainError& e) {
      throw ConfigError("architectures." + std::string(architecture::tag(profiles[i].kind)) +
                        ": " + e.what());
    }
  }
}

MetricStats summarize(std::span<const double> values) {
  if (values.empty()) throw DomainError("summarize: no samples");
  MetricStats stats;
  stats.n_samples = values.size();
  // Summation rounding would give a constant column a tiny nonzero spread.
  if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; })) {
    stats.mean = values[0];
    return stats;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - stats.mean) * (v - stats.mean);
    stats.std_dev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  stats.ci95_half_width = kCi95Z * stats.std_dev / std::sqrt(static_cast<double>(values.size()));
  return stats;
}

RunMetrics evaluate_geometry(const SimulationSetup& setup, ComboId combo,
                             const scenario::ScenarioInstance& instance) {
  const auto& cfg = setup.scenario;
  const auto& profile = setup.profile(combo.architecture);
  const ArchitectureKind kind = combo.architecture;
  const int n_users = static_cast<int>(instance.users.size());

  RunMetrics m;
  const linktech::BhLinkContext bh_link{cfg.ground_eirp_dbm, cfg.noise_figure_db,
                                        cfg.bh_distance_m};
  m.bh_rate_bps = linktech::backhaul_capacity(setup.technology(combo.technology), bh_link);
  m.bh_cap_bps = architecture::backhaul_cap(kind, m.bh_rate_bps);

  std::vector<double> access_rates;
  std::vector<double> distances;
  access_rates.reserve(instance.users.size());
  distances.reserve(instance.users.size());
  for (const auto& user : instance.users) {
    const double d = scenario::slant_distance(instance.uav_position, user.position,
                                              cfg.user_height_m);
    const double loss = channel::two_ray_path_loss(
        {cfg.access_freq_hz, d, instance.uav_position.z, cfg.user_height_m});
    const double snr =
        channel::snr_linear(cfg.uav_eirp_dbm, loss, cfg.access_bandwidth_hz, cfg.noise_figure_db);
    access_rates.push_back(
        architecture::access_rate_per_user(kind, cfg.access_bandwidth_hz, n_users, snr));
    distances.push_back(d);
  }

  for (double r : access_rates) m.aggregate_access_bps += r;
  m.delivered_rate_bps = architecture::delivered_rate(kind, m.aggregate_access_bps, m.bh_rate_bps);
  if (m.delivered_rate_bps > m.bh_cap_bps || m.delivered_rate_bps > m.aggregate_access_bps) {
    throw EvaluationError("delivered rate exceeds the backhaul cap or the access aggregate");
  }
  m.per_user_rate_bps = m.delivered_rate_bps / n_users;

  // Serialization runs at the rate a hop has while it is active; half-duplex
  // time sharing lowers throughput, not the airtime of a single packet.
  const double duty = architecture::duty_cycle(kind);
  double latency_sum = 0.0;
  for (std::size_t u = 0; u < access_rates.size(); ++u) {
    latency_sum += architecture::total_latency(kind, profile, cfg.packet_bits,
                                               access_rates[u] / duty, distances[u],
                                               cfg.bh_distance_m, m.bh_rate_bps);
  }
  m.total_latency_s = latency_sum / n_users;
  return m;
}

RunMetrics evaluate_run(const SimulationSetup& setup, ComboId combo, std::uint64_t run_index) {
  try {
    try {
      RunMetrics m =
          evaluate_geometry(setup, combo, scenario::sample_scenario(setup.scenario, run_index));
      m.run_index = run_index;
      return m;
    } catch (const TwoRayNullError&) {
      const std::uint64_t retry = run_index + kResampleStride;
      RunMetrics m =
          evaluate_geometry(setup, combo, scenario::sample_scenario(setup.scenario, retry));
      m.run_index = run_index;
      m.resampled = true;
      return m;
    }
  } catch (const TwoRayNullError& e) {
    throw EvaluationError(run_label(combo, run_index) +
                          ": two-ray null persisted after resample: " + e.what());
  } catch (const EvaluationError& e) {
    throw EvaluationError(run_label(combo, run_index) + ": " + e.what());
  } catch (const DomainError& e) {
    throw EvaluationError(run_label(combo, run_index) + ": " + e.what());
  }
}

std::vector<ComboResult> evaluate_all_serial(const SimulationSetup& setup,
                                             std::span<const ComboId> combos) {
  require_combos(combos);
  setup.validate();
  const auto n_runs = static_cast<std::uint64_t>(setup.scenario.n_runs);
  std::vector<RunMetrics> runs;
  runs.reserve(combos.size() * n_runs);
  for (const ComboId& combo : combos) {
    for (std::uint64_t r = 0; r < n_runs; ++r) runs.push_back(evaluate_run(setup, combo, r));
  }
  return assemble(setup, combos, std::move(runs));
}

std::vector<ComboResult> evaluate_all(const SimulationSetup& setup,
                                      std::span<const ComboId> combos, ExecutionPolicy policy) {
  require_combos(combos);
  setup.validate();
  const auto n_runs = static_cast<std::int64_t>(setup.scenario.n_runs);
  const auto n_items = static_cast<std::int64_t>(combos.size()) * n_runs;
  const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();

  std::vector<RunMetrics> runs(static_cast<std::size_t>(n_items));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_items));

#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t i = 0; i < n_items; ++i) {
    const auto item = static_cast<std::size_t>(i);
    try {
      runs[item] = evaluate_run(setup, combos[item / static_cast<std::size_t>(n_runs)],
                                static_cast<std::uint64_t>(i % n_runs));
    } catch (...) {
      errors[item] = std::current_exception();
    }
  }

  // Report the first failure in item order so the diagnostic does not depend
  // on thread scheduling.
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return assemble(setup, combos, std::move(runs));
}

std::vector<SweepSeries> sweep_users(const SimulationSetup& setup,
                                     std::span<const ComboId> combos,
                                     std::span<const int> user_counts, ExecutionPolicy policy) {
  if (user_counts.empty()) throw ConfigError("sweep: user count list is empty");
  for (int count : user_counts) {
    if (count < setup.scenario.n_user_spots) {
      throw ConfigError("sweep: user count " + std::to_string(count) +
                        " is below n_user_spots");
    }
  }

  std::vector<SweepSeries> series(combos.size());
  for (std::size_t c = 0; c < combos.size(); ++c) series[c].id = combos[c];

  SimulationSetup point_setup = setup;
  for (int count : user_counts) {
    point_setup.scenario.n_users = count;
    const auto results = evaluate_all(point_setup, combos, policy);
    for (std::size_t c = 0; c < combos.size(); ++c) {
      series[c].points.push_back({count, results[c].stats.total_latency});
    }
  }
  return series;
}

}  // namespace linksim::evaluator
