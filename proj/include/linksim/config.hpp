#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linksim/combo.hpp"
#include "linksim/costrank.hpp"
#include "linksim/evaluator.hpp"

namespace linksim::config {

inline constexpr std::array<int, 5> kDefaultSweepCounts = {2, 4, 8, 16, 32};

struct ResolvedConfig {
  evaluator::SimulationSetup setup;
  costrank::CostWeights weights;
  /// Explicit combo list; empty means default_combos(include_mmwave).
  std::vector<ComboId> combos;
  bool include_mmwave = false;
  std::vector<int> sweep_counts{kDefaultSweepCounts.begin(), kDefaultSweepCounts.end()};

  std::vector<ComboId> effective_combos() const;
  /// Fully populated document; parse_config(to_json()) reproduces this config.
  nlohmann::json to_json() const;
};

/// Unspecified keys keep their defaults, unknown keys are rejected. Errors
/// are ConfigError with the dotted key path in the message.
ResolvedConfig parse_config(const nlohmann::json& doc);
ResolvedConfig parse_config_file(const std::filesystem::path& path);

/// Command-line values that take precedence over the file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  std::optional<std::vector<int>> counts;
  std::optional<std::array<double, 3>> weights;
  std::optional<std::vector<ComboId>> combos;
  std::optional<bool> include_mmwave;

  /// Names of the fields that are set, for the manifest.
  std::vector<std::string> applied() const;
};

/// Applies the overrides and re-validates.
void apply_overrides(ResolvedConfig& cfg, const Overrides& overrides);

/// FNV-1a 64 over the compact dump of to_json(), as 16 hex digits.
std::string config_digest(const ResolvedConfig& cfg);

}  // namespace linksim::config
