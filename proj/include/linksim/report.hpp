#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linksim/costrank.hpp"
#include "linksim/evaluator.hpp"

// CSV tables and the run manifest. Numbers use 9 significant digits with '.'
// as decimal separator, independent of the global locale.

namespace linksim::report {

inline constexpr int kCsvSchemaVersion = 1;

std::string format_number(double value);

/// RFC 4180 quoting: fields containing ',', '"', CR or LF are quoted.
std::string csv_field(std::string_view text);

std::vector<std::string> results_columns();
std::vector<std::string> runs_columns();
std::vector<std::string> rank_columns();
std::vector<std::string> sweep_columns();

void write_results_csv(std::ostream& out, std::span<const evaluator::ComboResult> results);
void write_runs_csv(std::ostream& out, std::span<const evaluator::ComboResult> results);
void write_rank_csv(std::ostream& out, std::span<const costrank::RankedCombo> ranking);
void write_sweep_csv(std::ostream& out, std::span<const evaluator::SweepSeries> series);

/// Rate = mean delivered rate, latency = mean total latency, weight = payload.
std::vector<std::pair<ComboId, costrank::AttributeVector>> attributes_of(
    std::span<const evaluator::ComboResult> results);

/// Writes `contents` to dir/name; throws IoError.
void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& contents);

}  // namespace linksim::report
