#include "linksim/architecture.hpp"

#include <algorithm>
#include <cmath>

#include "linksim/channel.hpp"
#include "linksim/errors.hpp"

namespace linksim::architecture {

void ArchitectureProfile::validate() const {
  if (!(processing_latency_s >= 0.0) || !std::isfinite(processing_latency_s)) {
    throw DomainError("processing_latency_s must be finite and >= 0");
  }
  if (!(payload_weight_kg > 0.0) || !std::isfinite(payload_weight_kg)) {
    throw DomainError("payload_weight_kg must be positive");
  }
}

ArchitectureProfile default_profile(ArchitectureKind kind) {
  switch (kind) {
    case ArchitectureKind::Relay: return {kind, 0.1e-3, 0.4};
    case ArchitectureKind::FlyingBs: return {kind, 5e-3, 10.0};
    case ArchitectureKind::FlyingRrh: return {kind, 0.25e-3, 6.0};
  }
  throw DomainError("unknown architecture kind");
}

std::string_view tag(ArchitectureKind kind) {
  switch (kind) {
    case ArchitectureKind::Relay: return "relay";
    case ArchitectureKind::FlyingBs: return "bs";
    case ArchitectureKind::FlyingRrh: return "rrh";
  }
  return "?";
}

std::optional<ArchitectureKind> parse_architecture(std::string_view text) {
  for (ArchitectureKind kind : kAllArchitectures) {
    if (tag(kind) == text) return kind;
  }
  return std::nullopt;
}

double duty_cycle(ArchitectureKind kind) {
  return kind == ArchitectureKind::Relay ? 0.5 : 1.0;
}

double access_rate_per_user(ArchitectureKind kind, double bandwidth_hz, int n_users,
                            double snr_linear) {
  if (n_users <= 0) throw DomainError("access_rate_per_user: n_users must be >= 1");
  if (!(bandwidth_hz > 0.0)) throw DomainError("access_rate_per_user: bandwidth must be positive");
  if (!(snr_linear >= 0.0)) throw DomainError("access_rate_per_user: snr must be >= 0");
  // Scaling by 0.5 is exact in binary floating point, so the relay rate is
  // bit-for-bit half the BS/RRH rate.
  const double share = bandwidth_hz / n_users * duty_cycle(kind);
  return share * std::log2(1.0 + snr_linear);
}

double backhaul_cap(ArchitectureKind kind, double bh_rate_bps) {
  return bh_rate_bps * duty_cycle(kind);
}

double delivered_rate(ArchitectureKind kind, double aggregate_access_bps, double bh_rate_bps) {
  if (!(aggregate_access_bps >= 0.0) || !(bh_rate_bps >= 0.0)) {
    throw DomainError("delivered_rate: rates must be >= 0");
  }
  return std::min(aggregate_access_bps, backhaul_cap(kind, bh_rate_bps));
}

double link_latency(double distance_m, double packet_bits, double rate_bps) {
  if (!(distance_m > 0.0)) throw DomainError("link_latency: distance must be positive");
  if (!(packet_bits >= 0.0)) throw DomainError("link_latency: packet_bits must be >= 0");
  const double propagation = distance_m / channel::kSpeedOfLight;
  if (packet_bits == 0.0) return propagation;
  if (!(rate_bps > 0.0)) {
    throw DomainError("link_latency: zero rate cannot carry a non-empty packet");
  }
  return propagation + packet_bits / rate_bps;
}

double total_latency(ArchitectureKind kind, const ArchitectureProfile& profile,
                     double packet_bits, double per_user_rate_bps, double access_distance_m,
                     double bh_distance_m, double bh_rate_bps) {
  if (profile.kind != kind) throw DomainError("total_latency: profile does not match kind");
  profile.validate();
  const double access = link_latency(access_distance_m, packet_bits, per_user_rate_bps);
  const double backhaul = link_latency(bh_distance_m, packet_bits, bh_rate_bps);
  return access + backhaul + profile.processing_latency_s + core_to_cloud_latency();
}

}  // namespace linksim::architecture
