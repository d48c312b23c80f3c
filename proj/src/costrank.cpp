#include "linksim/costrank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linksim/errors.hpp"

namespace linksim::costrank {
namespace {

constexpr std::size_t kRate = 0;

double attribute(const AttributeVector& v, std::size_t z) {
  switch (z) {
    case 0: return v.data_rate_bps;
    case 1: return v.latency_s;
    default: return v.weight_kg;
  }
}

}  // namespace

CostWeights::CostWeights() : w_{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0} {}

CostWeights::CostWeights(std::array<double, 3> raw) {
  double sum = 0.0;
  for (double w : raw) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("cost weights must be finite and non-negative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("at least one cost weight must be positive");
  for (std::size_t z = 0; z < raw.size(); ++z) w_[z] = raw[z] / sum;
}

std::vector<NormalizedAttributes> normalize_attributes(std::span<const AttributeVector> vectors) {
  if (vectors.empty()) throw DomainError("normalize_attributes: empty input");
  for (const auto& v : vectors) {
    for (std::size_t z = 0; z < 3; ++z) {
      const double x = attribute(v, z);
      if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("normalize_attributes: attributes must be finite and >= 0");
      }
    }
  }

  std::vector<NormalizedAttributes> out(vectors.size());
  for (std::size_t z = 0; z < 3; ++z) {
    double lo = attribute(vectors[0], z);
    double hi = lo;
    for (const auto& v : vectors) {
      lo = std::min(lo, attribute(v, z));
      hi = std::max(hi, attribute(v, z));
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const double x = attribute(vectors[i], z);
      if (span == 0.0) {
        out[i][z] = 0.0;
      } else if (z == kRate) {
        out[i][z] = (hi - x) / span;
      } else {
        out[i][z] = (x - lo) / span;
      }
    }
  }
  return out;
}

double cost(const CostWeights& weights, const NormalizedAttributes& s) {
  const auto& w = weights.values();
  return w[0] * s[0] + w[1] * s[1] + w[2] * s[2];
}

std::vector<RankedCombo> rank(std::span<const std::pair<ComboId, AttributeVector>> results,
                              const CostWeights& weights) {
  if (results.empty()) throw DomainError("rank: no combos");
  std::vector<AttributeVector> raw;
  raw.reserve(results.size());
  for (const auto& [id, attrs] : results) raw.push_back(attrs);
  const auto normalized = normalize_attributes(raw);

  std::vector<RankedCombo> ranked(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    ranked[i] = {results[i].first, cost(weights, normalized[i]), normalized[i], raw[i]};
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedCombo& a, const RankedCombo& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.id < b.id;
  });
  return ranked;
}

}  // namespace linksim::costrank
