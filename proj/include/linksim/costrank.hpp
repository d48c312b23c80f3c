#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "linksim/combo.hpp"

// Weighted-sum cost over min-max normalized attributes; lower is better.

namespace linksim::costrank {

struct AttributeVector {
  double data_rate_bps = 0.0;  // benefit
  double latency_s = 0.0;      // cost
  double weight_kg = 0.0;      // cost, proxy for UAV energy use
};

/// s in [0,1]^3, ordered (rate, latency, weight).
using NormalizedAttributes = std::array<double, 3>;

class CostWeights {
 public:
  /// Equal weights.
  CostWeights();
  /// Non-negative, at least one positive; stored scaled to sum 1.
  explicit CostWeights(std::array<double, 3> raw);

  const std::array<double, 3>& values() const { return w_; }

 private:
  std::array<double, 3> w_;
};

/// Cost attributes map to (v - min)/(max - min), the rate to (max - v)/(max - min).
/// A constant column maps to 0.
std::vector<NormalizedAttributes> normalize_attributes(std::span<const AttributeVector> vectors);

double cost(const CostWeights& weights, const NormalizedAttributes& s);

struct RankedCombo {
  ComboId id;
  double cost = 0.0;
  NormalizedAttributes normalized{};
  AttributeVector raw;
};

/// All combos by ascending cost; ties go to the lower (technology, architecture) tag.
std::vector<RankedCombo> rank(std::span<const std::pair<ComboId, AttributeVector>> results,
                              const CostWeights& weights);

}  // namespace linksim::costrank
