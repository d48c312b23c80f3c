#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linksim/app.hpp"

namespace fs = std::filesystem;
using namespace linksim;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "linksim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("linksim_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("evaluate writes one row per combo plus a manifest") {
  TempDir dir("evaluate");
  const auto r = run({"evaluate", "--runs", "5", "--out-dir", dir.path.string()});
  REQUIRE(r.code == app::kExitOk);
  const auto results = lines(slurp(dir.path / "results.csv"));
  CHECK(results.size() == 13);
  CHECK(results[0].rfind("technology,architecture,n_runs,", 0) == 0);
  CHECK(lines(slurp(dir.path / "runs.csv")).size() == 1 + 12 * 5);

  const auto manifest = nlohmann::json::parse(slurp(dir.path / "manifest.json"));
  CHECK(manifest["subcommand"] == "evaluate");
  CHECK(manifest["files"] == nlohmann::json::array({"results.csv", "runs.csv"}));
  CHECK(manifest["flag_overrides"] == nlohmann::json::array({"runs"}));
  CHECK(manifest["config_digest"].get<std::string>().size() == 16);
  CHECK(manifest["resolved_config"]["scenario"]["n_runs"] == 5);
}

TEST_CASE("rank with weights gives twelve ranked rows") {
  TempDir dir("rank");
  const auto r = run({"rank", "--weights", "0.5,0.3,0.2", "--runs", "5", "--out-dir",
                      dir.path.string()});
  REQUIRE(r.code == app::kExitOk);
  const auto rows = lines(slurp(dir.path / "rank.csv"));
  REQUIRE(rows.size() == 13);
  CHECK(rows[1].rfind("1,", 0) == 0);
  CHECK(rows[12].rfind("12,", 0) == 0);
}

TEST_CASE("sweep-users writes one point per count and combo") {
  TempDir dir("sweep");
  const auto r = run({"sweep-users", "--counts", "2,4,8,16,32", "--runs", "4", "--combos",
                      "siso:bs,siso:rrh", "--out-dir", dir.path.string()});
  REQUIRE(r.code == app::kExitOk);
  CHECK(lines(slurp(dir.path / "sweep.csv")).size() == 1 + 2 * 5);
  CHECK_FALSE(fs::exists(dir.path / "results.csv"));
}

TEST_CASE("a fixed seed gives byte-identical outputs") {
  TempDir a("seed_a"), b("seed_b");
  REQUIRE(run({"evaluate", "--seed", "7", "--runs", "1", "--out-dir", a.path.string()}).code == 0);
  REQUIRE(run({"evaluate", "--seed", "7", "--runs", "1", "--threads", "3", "--out-dir",
               b.path.string()})
              .code == 0);
  CHECK(slurp(a.path / "results.csv") == slurp(b.path / "results.csv"));
  CHECK(slurp(a.path / "runs.csv") == slurp(b.path / "runs.csv"));
}

TEST_CASE("config file with flag precedence") {
  TempDir dir("config");
  const auto cfg = dir.path / "cfg.json";
  std::ofstream(cfg) << R"({"scenario": {"n_runs": 9, "rng_seed": 5}, "combos": ["fso:bs"]})";
  const auto out = dir.path / "out";
  REQUIRE(run({"evaluate", "--config", cfg.string(), "--runs", "2", "--out-dir", out.string()})
              .code == 0);
  CHECK(lines(slurp(out / "runs.csv")).size() == 3);
  const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
  CHECK(manifest["seed"] == 5);
  CHECK(manifest["config_file"] == cfg.string());
}

TEST_CASE("output directory falls back to the environment") {
  TempDir dir("env");
  ::setenv("LINKSIM_OUT_DIR", dir.path.string().c_str(), 1);
  const auto r = run({"evaluate", "--runs", "2", "--combos", "siso:relay"});
  ::unsetenv("LINKSIM_OUT_DIR");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir.path / "results.csv"));
}

TEST_CASE("exit codes") {
  TempDir dir("exit");
  SUBCASE("configuration errors") {
    CHECK(run({"evaluate", "--weights", "0,0,0", "--out-dir", dir.path.string()}).code ==
          app::kExitConfig);
    CHECK(run({"evaluate", "--combos", "siso:tower", "--out-dir", dir.path.string()}).code ==
          app::kExitConfig);
    CHECK(run({"evaluate", "--config", (dir.path / "nope.json").string()}).code ==
          app::kExitConfig);
    CHECK(run({"frobnicate"}).code == app::kExitConfig);
    CHECK(run({}).code == app::kExitConfig);
    const auto big = dir.path / "big.json";
    std::ofstream(big) << R"({"scenario": {"user_area_side_m": 2000}})";
    const auto r = run({"evaluate", "--config", big.string(), "--out-dir", dir.path.string()});
    CHECK(r.code == app::kExitConfig);
    CHECK(r.err.find("user_area_side_m") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.path / "results.csv"));
  }
  SUBCASE("runtime errors") {
    // Users pinned on the first two-ray null.
    const auto nulled = dir.path / "null.json";
    std::ofstream(nulled) << std::setprecision(17) << R"({"scenario": {"area_side_m": 1e-6, "user_area_side_m": 1e-6,
      "uav_xy_m": [5e-7, 5e-7], "access_freq_hz": )"
                          << 299792458.0 / (800.0 / 198.0) << "}}";
    const auto r = run({"evaluate", "--config", nulled.string(), "--runs", "2", "--combos",
                        "siso:bs", "--out-dir", dir.path.string()});
    CHECK(r.code == app::kExitRuntime);
    CHECK(r.err.find("siso:bs") != std::string::npos);
  }
  SUBCASE("I/O errors") {
    const auto blocker = dir.path / "file";
    std::ofstream(blocker) << "x";
    CHECK(run({"evaluate", "--runs", "1", "--out-dir", (blocker / "sub").string()}).code ==
          app::kExitIo);
  }
}
