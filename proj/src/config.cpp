#include "linksim/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "linksim/errors.hpp"

namespace linksim::config {
namespace {

using nlohmann::json;

/// Reads keys out of one JSON object and rejects anything it was not asked for.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "expected an object");
  }

  static void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
  }

  std::string key_path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  void read(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) fail(key_path(key), "expected a number");
      out = v->get<double>();
    }
  }

  void read(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) fail(key_path(key), "expected an integer");
      const auto value = v->get<std::int64_t>();
      if (value < INT32_MIN || value > INT32_MAX) fail(key_path(key), "integer out of range");
      out = static_cast<int>(value);
    }
  }

  void read(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned()) fail(key_path(key), "expected a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }

  void read(const std::string& key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) fail(key_path(key), "expected true or false");
      out = v->get<bool>();
    }
  }

  /// Reports the first key that no read() asked for.
  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.contains(key)) fail(key_path(key), "unknown key");
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

void parse_scenario(const json& node, scenario::ScenarioConfig& s) {
  Section sec(node, "scenario");
  sec.read("area_side_m", s.area_side_m);
  sec.read("user_area_side_m", s.user_area_side_m);
  sec.read("n_user_spots", s.n_user_spots);
  sec.read("n_users", s.n_users);
  sec.read("rescuer_ratio", s.rescuer_ratio);
  sec.read("uav_height_m", s.uav_height_m);
  sec.read("user_height_m", s.user_height_m);
  sec.read("bh_distance_m", s.bh_distance_m);
  sec.read("access_freq_hz", s.access_freq_hz);
  sec.read("access_bandwidth_hz", s.access_bandwidth_hz);
  sec.read("ground_eirp_dbm", s.ground_eirp_dbm);
  sec.read("uav_eirp_dbm", s.uav_eirp_dbm);
  sec.read("noise_figure_db", s.noise_figure_db);
  sec.read("packet_bits", s.packet_bits);
  sec.read("n_runs", s.n_runs);
  sec.read("rng_seed", s.rng_seed);
  if (const json* xy = sec.find("uav_xy_m")) {
    if (xy->is_null()) {
      s.uav_xy.reset();
    } else {
      if (!xy->is_array() || xy->size() != 2 || !(*xy)[0].is_number() || !(*xy)[1].is_number()) {
        Section::fail("scenario.uav_xy_m", "expected [x, y] in metres or null");
      }
      s.uav_xy = std::pair{(*xy)[0].get<double>(), (*xy)[1].get<double>()};
    }
  }
  sec.finish();
}

void parse_technologies(const json& node, evaluator::SimulationSetup& setup) {
  Section sec(node, "technologies");
  using namespace linktech;
  for (TechnologyKind kind : kAllTechnologies) {
    const std::string name{tag(kind)};
    const json* sub = sec.find(name);
    if (!sub) continue;
    Section t(*sub, "technologies." + name);
    auto& spec = setup.technologies[static_cast<std::size_t>(kind)];
    std::visit(
        [&](auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Fso>) {
            t.read("tx_power_w", s.tx_power_w);
            t.read("eta_t", s.eta_t);
            t.read("eta_r", s.eta_r);
            t.read("pol_loss_db", s.pol_loss_db);
            t.read("atm_loss_db_per_km", s.atm_loss_db_per_km);
            t.read("wavelength_m", s.wavelength_m);
            t.read("rx_aperture_area_m2", s.rx_aperture_area_m2);
            t.read("beam_divergence_rad", s.beam_divergence_rad);
            t.read("photons_per_bit", s.photons_per_bit);
          } else {
            t.read("bandwidth_hz", s.bandwidth_hz);
            t.read("carrier_hz", s.carrier_hz);
            if constexpr (std::is_same_v<T, Sub6MassiveMimo>) {
              t.read("m_antennas", s.m_antennas);
              t.read("k_streams", s.k_streams);
              t.read("coherence_symbols", s.coherence_symbols);
              t.read("csi_quality", s.csi_quality);
            }
          }
        },
        spec);
    t.finish();
  }
  sec.finish();
}

void parse_architectures(const json& node, evaluator::SimulationSetup& setup) {
  Section sec(node, "architectures");
  for (auto kind : architecture::kAllArchitectures) {
    const std::string name{architecture::tag(kind)};
    const json* sub = sec.find(name);
    if (!sub) continue;
    Section a(*sub, "architectures." + name);
    auto& profile = setup.profiles[static_cast<std::size_t>(kind)];
    a.read("processing_latency_s", profile.processing_latency_s);
    a.read("payload_weight_kg", profile.payload_weight_kg);
    a.finish();
  }
  sec.finish();
}

costrank::CostWeights make_weights(const std::array<double, 3>& raw, const std::string& path) {
  try {
    return costrank::CostWeights(raw);
  } catch (const DomainError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void validate_counts(const std::vector<int>& counts, int n_user_spots, const std::string& path) {
  if (counts.empty()) Section::fail(path, "must not be empty");
  for (int c : counts) {
    if (c < n_user_spots) {
      Section::fail(path, "user count " + std::to_string(c) + " is below n_user_spots");
    }
  }
}

void validate(const ResolvedConfig& cfg) {
  cfg.setup.validate();
  validate_counts(cfg.sweep_counts, cfg.setup.scenario.n_user_spots, "sweep_counts");
}

}  // namespace

std::vector<ComboId> ResolvedConfig::effective_combos() const {
  return combos.empty() ? default_combos(include_mmwave) : combos;
}

nlohmann::json ResolvedConfig::to_json() const {
  json doc;
  const auto& s = setup.scenario;
  doc["scenario"] = {
      {"area_side_m", s.area_side_m},
      {"user_area_side_m", s.user_area_side_m},
      {"n_user_spots", s.n_user_spots},
      {"n_users", s.n_users},
      {"rescuer_ratio", s.rescuer_ratio},
      {"uav_height_m", s.uav_height_m},
      {"user_height_m", s.user_height_m},
      {"bh_distance_m", s.bh_distance_m},
      {"access_freq_hz", s.access_freq_hz},
      {"access_bandwidth_hz", s.access_bandwidth_hz},
      {"ground_eirp_dbm", s.ground_eirp_dbm},
      {"uav_eirp_dbm", s.uav_eirp_dbm},
      {"noise_figure_db", s.noise_figure_db},
      {"packet_bits", s.packet_bits},
      {"n_runs", s.n_runs},
      {"rng_seed", s.rng_seed},
      {"uav_xy_m", s.uav_xy ? json::array({s.uav_xy->first, s.uav_xy->second}) : json(nullptr)},
  };

  json techs = json::object();
  for (const auto& spec : setup.technologies) {
    const std::string name{linktech::tag(linktech::kind_of(spec))};
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, linktech::Fso>) {
            techs[name] = {{"tx_power_w", t.tx_power_w},
                           {"eta_t", t.eta_t},
                           {"eta_r", t.eta_r},
                           {"pol_loss_db", t.pol_loss_db},
                           {"atm_loss_db_per_km", t.atm_loss_db_per_km},
                           {"wavelength_m", t.wavelength_m},
                           {"rx_aperture_area_m2", t.rx_aperture_area_m2},
                           {"beam_divergence_rad", t.beam_divergence_rad},
                           {"photons_per_bit", t.photons_per_bit}};
          } else {
            techs[name] = {{"bandwidth_hz", t.bandwidth_hz}, {"carrier_hz", t.carrier_hz}};
            if constexpr (std::is_same_v<T, linktech::Sub6MassiveMimo>) {
              techs[name]["m_antennas"] = t.m_antennas;
              techs[name]["k_streams"] = t.k_streams;
              techs[name]["coherence_symbols"] = t.coherence_symbols;
              techs[name]["csi_quality"] = t.csi_quality;
            }
          }
        },
        spec);
  }
  doc["technologies"] = techs;

  json archs = json::object();
  for (const auto& p : setup.profiles) {
    archs[std::string(architecture::tag(p.kind))] = {
        {"processing_latency_s", p.processing_latency_s},
        {"payload_weight_kg", p.payload_weight_kg}};
  }
  doc["architectures"] = archs;

  const auto& w = weights.values();
  doc["weights"] = {{"rate", w[0]}, {"latency", w[1]}, {"weight", w[2]}};
  if (combos.empty()) {
    doc["combos"] = nullptr;
  } else {
    json combo_list = json::array();
    for (const auto& c : combos) combo_list.push_back(to_string(c));
    doc["combos"] = combo_list;
  }
  doc["include_mmwave"] = include_mmwave;
  doc["sweep_counts"] = sweep_counts;
  return doc;
}

ResolvedConfig parse_config(const nlohmann::json& doc) {
  ResolvedConfig cfg;
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  Section root(doc, "");

  if (const json* node = root.find("scenario")) parse_scenario(*node, cfg.setup.scenario);
  if (const json* node = root.find("technologies")) parse_technologies(*node, cfg.setup);
  if (const json* node = root.find("architectures")) parse_architectures(*node, cfg.setup);

  if (const json* node = root.find("weights")) {
    Section w(*node, "weights");
    std::array<double, 3> raw{1.0, 1.0, 1.0};
    w.read("rate", raw[0]);
    w.read("latency", raw[1]);
    w.read("weight", raw[2]);
    w.finish();
    cfg.weights = make_weights(raw, "weights");
  }

  if (const json* node = root.find("combos"); node && !node->is_null()) {
    if (!node->is_array()) Section::fail("combos", "expected an array of \"tech:arch\" strings");
    if (node->empty()) Section::fail("combos", "must not be empty (omit it or use null for the defaults)");
    for (std::size_t i = 0; i < node->size(); ++i) {
      const std::string path = "combos[" + std::to_string(i) + "]";
      const json& item = (*node)[i];
      if (!item.is_string()) Section::fail(path, "expected a \"tech:arch\" string");
      const auto combo = parse_combo(item.get<std::string>());
      if (!combo) Section::fail(path, "unknown combo \"" + item.get<std::string>() + "\"");
      cfg.combos.push_back(*combo);
    }
  }

  root.read("include_mmwave", cfg.include_mmwave);

  if (const json* node = root.find("sweep_counts")) {
    if (!node->is_array()) Section::fail("sweep_counts", "expected an array of integers");
    cfg.sweep_counts.clear();
    for (std::size_t i = 0; i < node->size(); ++i) {
      const json& item = (*node)[i];
      if (!item.is_number_integer()) {
        Section::fail("sweep_counts[" + std::to_string(i) + "]", "expected an integer");
      }
      cfg.sweep_counts.push_back(item.get<int>());
    }
  }

  root.finish();

  validate(cfg);
  return cfg;
}

ResolvedConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  try {
    return parse_config(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> Overrides::applied() const {
  std::vector<std::string> names;
  if (seed) names.emplace_back("seed");
  if (runs) names.emplace_back("runs");
  if (counts) names.emplace_back("counts");
  if (weights) names.emplace_back("weights");
  if (combos) names.emplace_back("combos");
  if (include_mmwave) names.emplace_back("include_mmwave");
  return names;
}

void apply_overrides(ResolvedConfig& cfg, const Overrides& overrides) {
  if (overrides.seed) cfg.setup.scenario.rng_seed = *overrides.seed;
  if (overrides.runs) cfg.setup.scenario.n_runs = *overrides.runs;
  if (overrides.counts) {
    validate_counts(*overrides.counts, cfg.setup.scenario.n_user_spots, "--counts");
    cfg.sweep_counts = *overrides.counts;
  }
  if (overrides.weights) cfg.weights = make_weights(*overrides.weights, "--weights");
  if (overrides.combos) {
    if (overrides.combos->empty()) Section::fail("--combos", "must not be empty");
    cfg.combos = *overrides.combos;
  }
  if (overrides.include_mmwave) cfg.include_mmwave = *overrides.include_mmwave;
  validate(cfg);
}

std::string config_digest(const ResolvedConfig& cfg) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : cfg.to_json().dump()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace linksim::config
