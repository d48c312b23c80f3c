#pragma once

#include <array>
#include <optional>
#include <string_view>

// Per-architecture end-to-end models: access rate, delivered-rate bottleneck,
// latency composition and payload weight.

namespace linksim::architecture {

enum class ArchitectureKind { Relay, FlyingBs, FlyingRrh };

inline constexpr std::array<ArchitectureKind, 3> kAllArchitectures = {
    ArchitectureKind::Relay, ArchitectureKind::FlyingBs, ArchitectureKind::FlyingRrh};

struct ArchitectureProfile {
  ArchitectureKind kind = ArchitectureKind::FlyingBs;
  double processing_latency_s = 0.0;
  double payload_weight_kg = 1.0;

  void validate() const;
};

/// Relay 0.1 ms / 0.4 kg, FlyingBs 5 ms / 10 kg, FlyingRrh 0.25 ms / 6 kg.
ArchitectureProfile default_profile(ArchitectureKind kind);

/// relay, bs, rrh
std::string_view tag(ArchitectureKind kind);
std::optional<ArchitectureKind> parse_architecture(std::string_view tag);

struct EndToEndResult {
  double delivered_rate_bps = 0.0;
  double per_user_rate_bps = 0.0;
  double total_latency_s = 0.0;
  double payload_weight_kg = 0.0;
};

/// Fraction of time a half-duplex relay spends on each hop; 1 for the others.
double duty_cycle(ArchitectureKind kind);

/// Time-averaged DL rate of one user under equal bandwidth split:
/// (B/n) log2(1+SNR), halved again for the relay.
double access_rate_per_user(ArchitectureKind kind, double bandwidth_hz, int n_users,
                            double snr_linear);

/// Largest rate the backhaul/fronthaul can feed to the users: bh for BS/RRH,
/// bh/2 for the relay (its BH hop only gets half the slots).
double backhaul_cap(ArchitectureKind kind, double bh_rate_bps);

/// min(aggregate access, backhaul_cap).
double delivered_rate(ArchitectureKind kind, double aggregate_access_bps, double bh_rate_bps);

/// Propagation plus serialization on one hop.
double link_latency(double distance_m, double packet_bits, double rate_bps);

/// Access hop + BH/FH hop + onboard processing (+ core-to-cloud, which is 0).
/// For the relay the two hops are "relay link 1" and "relay link 2".
double total_latency(ArchitectureKind kind, const ArchitectureProfile& profile,
                     double packet_bits, double per_user_rate_bps, double access_distance_m,
                     double bh_distance_m, double bh_rate_bps);

/// The fibre link between core network and cloud is ideal.
constexpr double core_to_cloud_latency() { return 0.0; }

}  // namespace linksim::architecture
