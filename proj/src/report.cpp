#include "linksim/report.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "linksim/errors.hpp"

namespace linksim::report {
namespace {

constexpr int kSignificantDigits = 9;

struct MetricColumn {
  const char* name;
  evaluator::MetricStats evaluator::RunStatistics::*stats;
};

constexpr MetricColumn kMetrics[] = {
    {"bh_rate_bps", &evaluator::RunStatistics::bh_rate},
    {"aggregate_access_bps", &evaluator::RunStatistics::aggregate_access},
    {"delivered_rate_bps", &evaluator::RunStatistics::delivered_rate},
    {"total_latency_s", &evaluator::RunStatistics::total_latency},
};

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

std::string tech_tag(const ComboId& id) { return std::string(linktech::tag(id.technology)); }
std::string arch_tag(const ComboId& id) { return std::string(architecture::tag(id.architecture)); }

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, kSignificantDigits);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> results_columns() {
  std::vector<std::string> cols = {"technology", "architecture", "n_runs"};
  for (const auto& m : kMetrics) {
    cols.push_back(std::string(m.name) + "_mean");
    cols.push_back(std::string(m.name) + "_std");
    cols.push_back(std::string(m.name) + "_ci95");
  }
  cols.emplace_back("payload_weight_kg");
  return cols;
}

std::vector<std::string> runs_columns() {
  return {"technology",         "architecture",      "run_index",
          "resampled",          "bh_rate_bps",       "bh_cap_bps",
          "aggregate_access_bps", "delivered_rate_bps", "per_user_rate_bps",
          "total_latency_s"};
}

std::vector<std::string> rank_columns() {
  return {"rank",   "technology", "architecture",  "cost",      "s_rate",
          "s_latency", "s_weight", "data_rate_bps", "latency_s", "weight_kg"};
}

std::vector<std::string> sweep_columns() {
  return {"technology",     "architecture",   "n_users",  "latency_mean_s",
          "latency_std_s", "latency_ci95_s", "n_samples"};
}

void write_results_csv(std::ostream& out, std::span<const evaluator::ComboResult> results) {
  write_row(out, results_columns());
  for (const auto& r : results) {
    std::vector<std::string> row = {tech_tag(r.id), arch_tag(r.id),
                                    std::to_string(r.stats.delivered_rate.n_samples)};
    for (const auto& m : kMetrics) {
      const auto& s = r.stats.*(m.stats);
      row.push_back(format_number(s.mean));
      row.push_back(format_number(s.std_dev));
      row.push_back(format_number(s.ci95_half_width));
    }
    row.push_back(format_number(r.payload_weight_kg));
    write_row(out, row);
  }
}

void write_runs_csv(std::ostream& out, std::span<const evaluator::ComboResult> results) {
  write_row(out, runs_columns());
  for (const auto& r : results) {
    for (const auto& run : r.runs) {
      write_row(out, {tech_tag(r.id), arch_tag(r.id), std::to_string(run.run_index),
                      run.resampled ? "1" : "0", format_number(run.bh_rate_bps),
                      format_number(run.bh_cap_bps), format_number(run.aggregate_access_bps),
                      format_number(run.delivered_rate_bps), format_number(run.per_user_rate_bps),
                      format_number(run.total_latency_s)});
    }
  }
}

void write_rank_csv(std::ostream& out, std::span<const costrank::RankedCombo> ranking) {
  write_row(out, rank_columns());
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto& r = ranking[i];
    write_row(out, {std::to_string(i + 1), tech_tag(r.id), arch_tag(r.id), format_number(r.cost),
                    format_number(r.normalized[0]), format_number(r.normalized[1]),
                    format_number(r.normalized[2]), format_number(r.raw.data_rate_bps),
                    format_number(r.raw.latency_s), format_number(r.raw.weight_kg)});
  }
}

void write_sweep_csv(std::ostream& out, std::span<const evaluator::SweepSeries> series) {
  write_row(out, sweep_columns());
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      write_row(out, {tech_tag(s.id), arch_tag(s.id), std::to_string(p.n_users),
                      format_number(p.latency.mean), format_number(p.latency.std_dev),
                      format_number(p.latency.ci95_half_width),
                      std::to_string(p.latency.n_samples)});
    }
  }
}

std::vector<std::pair<ComboId, costrank::AttributeVector>> attributes_of(
    std::span<const evaluator::ComboResult> results) {
  std::vector<std::pair<ComboId, costrank::AttributeVector>> out;
  out.reserve(results.size());
  for (const auto& r : results) {
    out.push_back({r.id,
                   {r.stats.delivered_rate.mean, r.stats.total_latency.mean, r.payload_weight_kg}});
  }
  return out;
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& contents) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace linksim::report
