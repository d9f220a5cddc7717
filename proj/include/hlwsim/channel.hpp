#pragma once

#include <vector>

#include "hlwsim/topology.hpp"
#include "hlwsim/types.hpp"

namespace hlwsim {

// Per-drop link state, N_a x N_u. capacity is zero exactly where sinr is zero.
struct ChannelState {
  Matrix sinr;      // linear, unitless
  Matrix capacity;  // bit/s
};

// Lambertian line-of-sight optical gain. The LED points straight down, the
// photodiode straight up, so the irradiance and incidence angles coincide.
// Zero beyond the field of view. Throws on co-located endpoints.
double lifi_los_gain(const Vec3& ap_position, const Vec3& ue_position,
                     const LiFiRadioParams& params);

// First-order reflections off the four walls, discretized at
// nlos_grid_resolution_m. Both hops respect the emission and FOV cutoffs.
double lifi_nlos_gain(const Vec3& ap_position, const Vec3& ue_position,
                      const NetworkTopology& topo, const LiFiRadioParams& params);

// Free-space path loss up to the breakpoint distance, then an extra
// 10*kappa*log10(d/d_bp). Returns the linear SNR over the AP bandwidth.
double wifi_snr(const ApDescriptor& ap, const Vec3& ue_position,
                const WiFiRadioParams& params);

// LiFi rows carry electrical SNR (R*P*H)^2/(N0*B); in CoChannel mode the LoS
// signals of the other LiFi APs are added to the denominator. WiFi row from
// wifi_snr. Pure function of positions.
Matrix sinr_matrix(const NetworkTopology& topo, const std::vector<Vec3>& ue_positions);

// Link capacity. LiFi: (B/2)*log2(1 + (e/2pi)*sinr); WiFi: B*log2(1 + sinr).
double link_capacity(double sinr, double bandwidth_hz, ApKind kind);

// sinr_matrix plus the per-link capacities.
ChannelState compute_channel(const NetworkTopology& topo,
                             const std::vector<Vec3>& ue_positions);

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double db_to_linear(double x) { return std::pow(10.0, x / 10.0); }

}  // namespace hlwsim
