// Acceptance suite: one line per criterion, nonzero exit if any fails.
// usage: acceptance <path-to-linksim> <work-dir> [--expect-fail ACn]...
// A criterion listed with --expect-fail still prints [FAIL]; it only stops
// that failure from setting the exit code. If it passes, the exit code is set.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle_values.hpp"
#include "linksim/channel.hpp"
#include "linksim/config.hpp"
#include "linksim/costrank.hpp"
#include "linksim/evaluator.hpp"
#include "linksim/linktech.hpp"

namespace fs = std::filesystem;
using namespace linksim;

namespace {

// Tolerances.
constexpr double kTwoRayAbsDb = 0.02;
constexpr double kTwoRayRandomRel = 1e-9;
constexpr double kSaturationRel = 1e-3;
constexpr double kFsoRel = 1e-2;
constexpr int kFigureRuns = 100;
constexpr int kRankTables = 200;
constexpr std::uint64_t kRankSeed = 20261016;

std::vector<std::string> failed;

void report(bool ok, const std::string& id, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << detail << "\n";
  if (!ok) failed.push_back(id);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void ac1_two_ray() {
  const double loss = channel::two_ray_path_loss({2.6e9, 1000.0, 200.0, 2.0});
  bool ok = std::abs(loss - 109.01) <= kTwoRayAbsDb &&
            std::abs(loss - oracle::kTwoRay26GHz1km) <= kTwoRayAbsDb;
  double worst = 0.0;
  for (const auto& c : oracle::kRandomTwoRay) {
    const double got =
        channel::two_ray_path_loss({c.frequency_hz, c.distance_m, c.tx_height_m, c.rx_height_m});
    worst = std::max(worst, std::abs(got - c.loss_db) / std::abs(c.loss_db));
  }
  ok = ok && worst <= kTwoRayRandomRel;
  report(ok, "AC1", fmt("two-ray 2.6 GHz/1 km/200 m/2 m = %.5f dB (target 109.01 +/- 0.02); "
                        "10 random geometries worst rel err %.2e (tol 1e-9)",
                        loss, worst));
}

void ac2_capacity() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> bw(1e5, 1e9), snr_db(-30.0, 60.0);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const double b = bw(rng), snr = std::pow(10.0, snr_db(rng) / 10.0);
    if (linktech::capacity_sub6_mimo2x2(b, snr) != 2.0 * linktech::capacity_sub6_siso(b, snr)) {
      ++mismatches;
    }
  }

  const linktech::Sub6MassiveMimo mm{};
  const double at_1e6 = linktech::capacity_massive_mimo(mm, 1e6);
  const double k = mm.k_streams, m = mm.m_antennas;
  const double limit =
      mm.bandwidth_hz * k * (1.0 - k / mm.coherence_symbols) * std::log2(1.0 + m / k);
  const double sat_err = std::abs(at_1e6 - limit) / limit;

  const double fso = linktech::capacity_fso(linktech::Fso{}, 50e3);
  const double fso_err = std::abs(fso - oracle::kFsoDefaults50km) / oracle::kFsoDefaults50km;

  report(mismatches == 0 && sat_err <= kSaturationRel && fso_err <= kFsoRel, "AC2",
         std::to_string(mismatches) + "/1000 mimo2x2 != 2*siso; " +
             fmt("massive saturation rel err %.2e (tol 1e-3); FSO 50 km = %.4e bit/s, "
                 "rel err %.2e vs oracle (tol 1e-2)",
                 sat_err, fso, fso_err));
}

evaluator::SimulationSetup default_setup() {
  auto cfg = config::parse_config(nlohmann::json::object());
  cfg.setup.scenario.bh_distance_m = 50e3;
  cfg.setup.scenario.n_runs = kFigureRuns;
  return cfg.setup;
}

void ac3_rate_ordering() {
  const auto setup = default_setup();
  const auto combos = default_combos(false);
  const auto results = evaluator::evaluate_all(setup, combos);
  auto mean_rate = [&](TechnologyKind t, ArchitectureKind a) {
    for (const auto& r : results) {
      if (r.id == ComboId{t, a}) return r.stats.delivered_rate.mean;
    }
    return std::nan("");
  };
  bool ordered = true;
  std::string detail;
  for (auto arch : architecture::kAllArchitectures) {
    const double massive = mean_rate(TechnologyKind::Sub6MassiveMimo, arch);
    const double mimo = mean_rate(TechnologyKind::Sub6Mimo2x2, arch);
    const double siso = mean_rate(TechnologyKind::Sub6Siso, arch);
    ordered = ordered && massive > mimo && mimo > siso;
    detail += std::string(architecture::tag(arch)) +
              fmt(" %.4g>%.4g>%.4g; ", massive / 1e6, mimo / 1e6, siso / 1e6);
  }
  long violations = 0;
  for (const auto& r : results) {
    for (const auto& run : r.runs) {
      if (run.delivered_rate_bps > run.bh_cap_bps || run.per_user_rate_bps > run.bh_cap_bps) {
        ++violations;
      }
    }
  }
  report(ordered && violations == 0, "AC3",
         "mean delivered Mbit/s massive>mimo>siso: " + detail + std::to_string(violations) +
             " cap violations over " + std::to_string(kFigureRuns) + " runs x 12 combos");
}

void ac4_latency_sweep() {
  const auto setup = default_setup();
  const auto combos = default_combos(false);
  const std::vector<int> counts{2, 4, 8, 16, 32};
  const auto series = evaluator::sweep_users(setup, combos, counts);
  auto curve = [&](TechnologyKind t, ArchitectureKind a) -> const evaluator::SweepSeries& {
    for (const auto& s : series) {
      if (s.id == ComboId{t, a}) return s;
    }
    throw std::logic_error("missing combo");
  };
  int bs_not_above = 0, decreasing = 0;
  for (auto tech : {TechnologyKind::Sub6Siso, TechnologyKind::Sub6Mimo2x2,
                    TechnologyKind::Sub6MassiveMimo, TechnologyKind::Fso}) {
    const auto& bs = curve(tech, ArchitectureKind::FlyingBs);
    const auto& rrh = curve(tech, ArchitectureKind::FlyingRrh);
    const auto& relay = curve(tech, ArchitectureKind::Relay);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const double b = bs.points[k].latency.mean;
      if (!(b > rrh.points[k].latency.mean) || !(b > relay.points[k].latency.mean)) {
        ++bs_not_above;
      }
    }
  }
  for (const auto& s : series) {
    for (std::size_t k = 1; k < s.points.size(); ++k) {
      if (s.points[k].latency.mean < s.points[k - 1].latency.mean) ++decreasing;
    }
  }
  const auto& siso_bs = curve(TechnologyKind::Sub6Siso, ArchitectureKind::FlyingBs);
  report(bs_not_above == 0 && decreasing == 0, "AC4",
         std::to_string(bs_not_above) + " points with BS not above RRH and relay, " +
             std::to_string(decreasing) + " decreasing steps over 12 curves x {2,4,8,16,32}" +
             fmt("; siso:bs %.3f ms at 2 users, %.3f ms at 32", 
                 siso_bs.points.front().latency.mean * 1e3,
                 siso_bs.points.back().latency.mean * 1e3));
}

void ac5_relay_half() {
  const auto setup = default_setup();
  int mismatches = 0;
  for (auto tech : linktech::kAllTechnologies) {
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(kFigureRuns); ++r) {
      const auto relay = evaluator::evaluate_run(setup, {tech, ArchitectureKind::Relay}, r);
      const auto bs = evaluator::evaluate_run(setup, {tech, ArchitectureKind::FlyingBs}, r);
      if (relay.aggregate_access_bps != bs.aggregate_access_bps / 2.0) ++mismatches;
    }
  }
  report(mismatches == 0, "AC5",
         std::to_string(mismatches) + " of " + std::to_string(5 * kFigureRuns) +
             " runs where relay aggregate != BS aggregate / 2 (exact)");
}

using Table = std::vector<std::pair<ComboId, costrank::AttributeVector>>;

std::vector<std::pair<ComboId, double>> brute_force(const Table& t, const costrank::CostWeights& w) {
  std::array<double, 3> lo{}, hi{};
  auto attr = [](const costrank::AttributeVector& a, int z) {
    return z == 0 ? a.data_rate_bps : z == 1 ? a.latency_s : a.weight_kg;
  };
  for (int z = 0; z < 3; ++z) {
    lo[z] = hi[z] = attr(t[0].second, z);
    for (const auto& [id, a] : t) {
      lo[z] = std::min(lo[z], attr(a, z));
      hi[z] = std::max(hi[z], attr(a, z));
    }
  }
  std::vector<std::pair<ComboId, double>> out;
  for (const auto& [id, a] : t) {
    std::array<double, 3> s{};
    for (int z = 0; z < 3; ++z) {
      const double span = hi[z] - lo[z];
      s[z] = span == 0.0 ? 0.0
                         : z == 0 ? (hi[z] - attr(a, z)) / span : (attr(a, z) - lo[z]) / span;
    }
    const auto& wv = w.values();
    out.push_back({id, wv[0] * s[0] + wv[1] * s[1] + wv[2] * s[2]});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  return out;
}

void ac6_ranking() {
  std::mt19937_64 rng(kRankSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> rate(1e6, 3e8), lat(1e-3, 0.2), kg(0.1, 12.0);
  const auto combos = default_combos(true);
  const ComboId extra{TechnologyKind::MmWave, ArchitectureKind::Relay};

  int out_of_range = 0, rescale_changed = 0, top_displaced = 0, brute_mismatch = 0;
  int displaced_in_range = 0;
  for (int trial = 0; trial < kRankTables; ++trial) {
    Table t;
    for (std::size_t i = 0; i < 12; ++i) t.push_back({combos[i], {rate(rng), lat(rng), kg(rng)}});
    const costrank::CostWeights w({unit(rng), unit(rng), unit(rng)});
    const auto ranked = costrank::rank(t, w);

    for (const auto& r : ranked) {
      for (double s : r.normalized) {
        if (!(s >= 0.0 && s <= 1.0)) ++out_of_range;
      }
    }

    const double k = std::exp(8.0 * unit(rng) - 4.0);
    const auto& v = w.values();
    const auto rescaled = costrank::rank(t, costrank::CostWeights({k * v[0], k * v[1], k * v[2]}));
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      if (!(rescaled[i].id == ranked[i].id)) {
        ++rescale_changed;
        break;
      }
    }

    const auto expected = brute_force(t, w);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      if (!(expected[i].first == ranked[i].id) || expected[i].second != ranked[i].cost) {
        ++brute_mismatch;
        break;
      }
    }

    // A combo worse than or equal to the current top on every attribute.
    const auto& top = ranked.front();
    const costrank::AttributeVector added{top.raw.data_rate_bps * unit(rng),
                                          top.raw.latency_s * (1.0 + unit(rng)),
                                          top.raw.weight_kg * (1.0 + unit(rng))};
    Table grown = t;
    grown.push_back({extra, added});
    if (!(costrank::rank(grown, w).front().id == top.id)) {
      ++top_displaced;
      double min_rate = added.data_rate_bps, max_lat = 0.0, max_kg = 0.0;
      for (const auto& [id, a] : t) {
        min_rate = std::min(min_rate, a.data_rate_bps);
        max_lat = std::max(max_lat, a.latency_s);
        max_kg = std::max(max_kg, a.weight_kg);
      }
      const bool in_range = added.data_rate_bps >= min_rate && added.latency_s <= max_lat &&
                 added.weight_kg <= max_kg;
      if (in_range) ++displaced_in_range;
    }
  }

  report(out_of_range + rescale_changed + top_displaced + brute_mismatch == 0, "AC6",
         std::to_string(kRankTables) + " tables: " + std::to_string(out_of_range) +
             " normalized values outside [0,1], " + std::to_string(rescale_changed) +
             " rankings changed by weight rescaling, " + std::to_string(brute_mismatch) +
             " brute-force mismatches, " + std::to_string(top_displaced) +
             " top combos displaced by an added dominated combo (" +
             std::to_string(displaced_in_range) + " of them with the added combo inside every "
             "existing range)");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ac7_determinism(const std::string& linksim, const fs::path& work) {
  const std::vector<std::pair<std::string, int>> invocations{{"a", 1}, {"b", 1}, {"c", 4}};
  bool ran = true;
  for (const auto& [name, threads] : invocations) {
    const std::string cmd = "\"" + linksim + "\" evaluate --threads " + std::to_string(threads) +
                            " --out-dir \"" + (work / name).string() + "\" > /dev/null";
    ran = ran && std::system(cmd.c_str()) == 0;
  }
  int differing = 0;
  for (const char* file : {"results.csv", "runs.csv"}) {
    const std::string ref = slurp(work / "a" / file);
    if (ref.empty()) ++differing;
    for (const char* other : {"b", "c"}) {
      if (slurp(work / other / file) != ref) ++differing;
    }
  }
  report(ran && differing == 0, "AC7",
         std::string(ran ? "" : "an invocation failed; ") +
             "`linksim evaluate` x3 (threads 1, 1, 4): " + std::to_string(differing) +
             " of 4 results.csv/runs.csv comparisons differ");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> expected_failures;
  bool usage_ok = argc >= 3;
  for (int i = 3; usage_ok && i < argc; i += 2) {
    usage_ok = std::string(argv[i]) == "--expect-fail" && i + 1 < argc;
    if (usage_ok) expected_failures.emplace_back(argv[i + 1]);
  }
  if (!usage_ok) {
    std::cerr << "usage: acceptance <path-to-linksim> <work-dir> [--expect-fail ACn]...\n";
    return 2;
  }
  const fs::path work = argv[2];
  fs::remove_all(work);
  fs::create_directories(work);

  const std::vector<std::pair<const char*, void (*)()>> checks{
      {"AC1", ac1_two_ray},         {"AC2", ac2_capacity}, {"AC3", ac3_rate_ordering},
      {"AC4", ac4_latency_sweep},   {"AC5", ac5_relay_half}, {"AC6", ac6_ranking}};
  for (const auto& [id, check] : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      report(false, id, std::string("threw: ") + e.what());
    }
  }
  try {
    ac7_determinism(argv[1], work);
  } catch (const std::exception& e) {
    report(false, "AC7", std::string("threw: ") + e.what());
  }

  auto listed = [](const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  int unexpected = 0;
  std::cout << 7 - failed.size() << "/7 criteria passed\n";
  for (const auto& id : failed) {
    if (listed(expected_failures, id)) {
      std::cout << id << ": known failure, see README\n";
    } else {
      ++unexpected;
    }
  }
  for (const auto& id : expected_failures) {
    if (!listed(failed, id)) {
      std::cout << id << ": listed as a known failure but passed\n";
      ++unexpected;
    }
  }
  return unexpected == 0 ? 0 : 1;
}
