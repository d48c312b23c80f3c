#include "linksim/combo.hpp"

namespace linksim {

std::string to_string(const ComboId& id) {
  std::string out{linktech::tag(id.technology)};
  out += ':';
  out += architecture::tag(id.architecture);
  return out;
}

std::optional<ComboId> parse_combo(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto tech = linktech::parse_technology(text.substr(0, colon));
  const auto arch = architecture::parse_architecture(text.substr(colon + 1));
  if (!tech || !arch) return std::nullopt;
  return ComboId{*tech, *arch};
}

std::vector<ComboId> default_combos(bool include_mmwave) {
  std::vector<ComboId> combos;
  for (TechnologyKind tech : linktech::kAllTechnologies) {
    if (tech == TechnologyKind::MmWave && !include_mmwave) continue;
    for (ArchitectureKind arch : architecture::kAllArchitectures) combos.push_back({tech, arch});
  }
  return combos;
}

}  // namespace linksim
