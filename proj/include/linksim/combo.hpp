#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linksim/architecture.hpp"
#include "linksim/linktech.hpp"

namespace linksim {

using architecture::ArchitectureKind;
using linktech::TechnologyKind;

/// One (technology, architecture) pairing. Ordering is tag order, which is
/// also the ranking tie-break.
struct ComboId {
  TechnologyKind technology = TechnologyKind::Sub6Siso;
  ArchitectureKind architecture = ArchitectureKind::FlyingBs;

  auto operator<=>(const ComboId&) const = default;
};

/// "tech:arch", e.g. "massive-mimo:rrh".
std::string to_string(const ComboId& id);
std::optional<ComboId> parse_combo(std::string_view text);

/// Every technology x architecture pairing in tag order; mmWave only on request.
std::vector<ComboId> default_combos(bool include_mmwave);

}  // namespace linksim
