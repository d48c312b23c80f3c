#include "linksim/app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linksim/config.hpp"
#include "linksim/costrank.hpp"
#include "linksim/errors.hpp"
#include "linksim/evaluator.hpp"
#include "linksim/report.hpp"
#include "linksim/rng.hpp"

namespace linksim::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kOutDirEnv = "LINKSIM_OUT_DIR";

std::vector<std::string> split_list(const std::string& text, const std::string& flag) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ConfigError(flag + ": empty list element in \"" + text + "\"");
    items.push_back(item);
  }
  if (items.empty()) throw ConfigError(flag + ": empty list");
  return items;
}

template <class T>
T parse_number(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    T value{};
    if constexpr (std::is_same_v<T, int>) {
      value = std::stoi(text, &used);
    } else {
      value = std::stod(text, &used);
    }
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ConfigError(flag + ": cannot parse \"" + text + "\"");
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Options {
  std::string config_path;
  std::string out_dir;
  std::string counts;
  std::string weights;
  std::string combos;
  std::uint64_t seed = 0;
  int runs = 0;
  int threads = 0;
  bool include_mmwave = false;
};

config::Overrides collect_overrides(const CLI::App& app, const Options& opt) {
  config::Overrides ov;
  if (app.count("--seed")) ov.seed = opt.seed;
  if (app.count("--runs")) ov.runs = opt.runs;
  if (app.count("--counts")) {
    std::vector<int> counts;
    for (const auto& s : split_list(opt.counts, "--counts")) {
      counts.push_back(parse_number<int>(s, "--counts"));
    }
    ov.counts = counts;
  }
  if (app.count("--weights")) {
    const auto parts = split_list(opt.weights, "--weights");
    if (parts.size() != 3) throw ConfigError("--weights: expected rate,latency,weight");
    ov.weights = std::array<double, 3>{parse_number<double>(parts[0], "--weights"),
                                       parse_number<double>(parts[1], "--weights"),
                                       parse_number<double>(parts[2], "--weights")};
  }
  if (app.count("--combos")) {
    std::vector<ComboId> combos;
    for (const auto& s : split_list(opt.combos, "--combos")) {
      const auto combo = parse_combo(s);
      if (!combo) throw ConfigError("--combos: unknown combo \"" + s + "\"");
      combos.push_back(*combo);
    }
    ov.combos = combos;
  }
  if (app.count("--include-mmwave")) ov.include_mmwave = true;
  return ov;
}

fs::path resolve_out_dir(const Options& opt) {
  if (!opt.out_dir.empty()) return opt.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

template <class Writer>
std::string render(Writer&& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

int execute(const std::string& subcommand, const CLI::App& app, const Options& opt,
            std::ostream& out) {
  config::ResolvedConfig cfg = opt.config_path.empty()
                                   ? config::parse_config(json::object())
                                   : config::parse_config_file(opt.config_path);
  const config::Overrides overrides = collect_overrides(app, opt);
  config::apply_overrides(cfg, overrides);

  const auto combos = cfg.effective_combos();
  const evaluator::ExecutionPolicy policy{opt.threads};

  // Evaluate everything before touching the output directory.
  std::vector<std::pair<std::string, std::string>> files;
  json schema = {{"version", report::kCsvSchemaVersion}};
  if (subcommand == "sweep-users") {
    const auto series =
        evaluator::sweep_users(cfg.setup, combos, cfg.sweep_counts, policy);
    files.emplace_back("sweep.csv", render([&](auto& os) { report::write_sweep_csv(os, series); }));
    schema["sweep.csv"] = report::sweep_columns();
  } else {
    const auto results = evaluator::evaluate_all(cfg.setup, combos, policy);
    files.emplace_back("results.csv",
                       render([&](auto& os) { report::write_results_csv(os, results); }));
    files.emplace_back("runs.csv", render([&](auto& os) { report::write_runs_csv(os, results); }));
    schema["results.csv"] = report::results_columns();
    schema["runs.csv"] = report::runs_columns();
    if (subcommand == "rank") {
      const auto attrs = report::attributes_of(results);
      const auto ranking = costrank::rank(attrs, cfg.weights);
      files.emplace_back("rank.csv",
                         render([&](auto& os) { report::write_rank_csv(os, ranking); }));
      schema["rank.csv"] = report::rank_columns();
    }
  }

  json manifest;
  manifest["tool"] = "linksim";
  manifest["tool_version"] = LINKSIM_VERSION;
  manifest["subcommand"] = subcommand;
  manifest["timestamp"] = utc_timestamp();
  manifest["config_digest"] = config::config_digest(cfg);
  manifest["config_file"] = opt.config_path.empty() ? json(nullptr) : json(opt.config_path);
  manifest["seed"] = cfg.setup.scenario.rng_seed;
  manifest["rng_identity"] = std::string(kRngIdentity);
  manifest["precedence"] = {"flags", "file", "defaults"};
  manifest["flag_overrides"] = overrides.applied();
  manifest["threads"] = opt.threads;
  json combo_list = json::array();
  for (const auto& c : combos) combo_list.push_back(to_string(c));
  manifest["combos"] = combo_list;
  json file_list = json::array();
  for (const auto& [name, contents] : files) file_list.push_back(name);
  manifest["files"] = file_list;
  manifest["csv_schema"] = schema;
  manifest["resolved_config"] = cfg.to_json();

  const fs::path dir = resolve_out_dir(opt);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  for (const auto& [name, contents] : files) report::write_file(dir, name, contents);
  report::write_file(dir, "manifest.json", manifest.dump(2) + "\n");

  out << "linksim " << subcommand << ": " << combos.size() << " combos, "
      << cfg.setup.scenario.n_runs << " runs each -> " << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo evaluation of UAV-aided maritime network architectures", "linksim"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "JSON configuration file");
  app.add_option("--out-dir", opt.out_dir,
                 std::string("Output directory (fallback: $") + kOutDirEnv + ", then .)");
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--runs", opt.runs, "Monte Carlo runs per combo");
  app.add_option("--counts", opt.counts, "User counts for sweep-users, e.g. 2,4,8,16,32");
  app.add_option("--weights", opt.weights, "Cost weights rate,latency,weight");
  app.add_option("--combos", opt.combos, "Comma list of tech:arch, e.g. siso:bs,fso:rrh");
  app.add_flag("--include-mmwave", opt.include_mmwave, "Add mmWave to the default combos");
  app.add_option("--threads", opt.threads, "Worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);

  app.add_subcommand("evaluate", "Rate/latency statistics per combo (results.csv, runs.csv)");
  app.add_subcommand("sweep-users", "Latency versus number of users (sweep.csv)");
  app.add_subcommand("rank", "Evaluate and rank combos by weighted cost (rank.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    return execute(subcommand, app, opt, out);
  } catch (const ConfigError& e) {
    err << "linksim: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "linksim: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "linksim: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "linksim: evaluation error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace linksim::app
