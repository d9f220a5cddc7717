#pragma once

#include <vector>

#include "hlwsim/types.hpp"

namespace hlwsim {

enum class ApKind { LiFi, WiFi };

enum class InterferenceMode { WdmOrthogonal, CoChannel };

struct LiFiRadioParams {
  double optical_tx_power_w = 3.0;
  double half_intensity_angle_deg = 60.0;
  double pd_area_m2 = 1e-4;
  double fov_deg = 80.0;
  double responsivity_a_per_w = 0.53;
  double filter_gain = 1.0;
  double concentrator_index = 1.5;
  double noise_psd_a2_per_hz = 1e-21;
  double wall_reflectivity = 0.8;
  bool nlos_enabled = false;
  double nlos_grid_resolution_m = 0.25;
  InterferenceMode interference_mode = InterferenceMode::WdmOrthogonal;
};

struct WiFiRadioParams {
  double tx_power_dbm = 20.0;
  double carrier_freq_hz = 2.4e9;
  double noise_psd_dbm_per_hz = -174.0;
  double noise_figure_db = 10.0;
  double breakpoint_distance_m = 10.0;
  double pathloss_exponent_after_bp = 3.5;
};

struct ApDescriptor {
  ApKind kind;
  Vec3 position;
  double bandwidth_hz;
};

// Room plus AP roster. aps[0] is the single WiFi AP; LiFi APs follow in
// grid row-major order, so documentation AP index 1 is WiFi.
struct NetworkTopology {
  double room_length = 10.0;
  double room_width = 10.0;
  double room_height = 3.0;
  std::vector<ApDescriptor> aps;
  LiFiRadioParams lifi_params;
  WiFiRadioParams wifi_params;

  int n_aps() const { return static_cast<int>(aps.size()); }
  int n_lifi() const { return n_aps() - 1; }
  int wifi_index() const;
  bool inside_footprint(double x, double y) const {
    return x >= 0.0 && x <= room_length && y >= 0.0 && y <= room_width;
  }
};

struct TopologyConfig {
  double room_length = 10.0;
  double room_width = 10.0;
  double room_height = 3.0;
  int lifi_grid_dim = 4;           // n, grid of n*n LiFi APs on the ceiling
  double lifi_separation_m = 2.5;  // grid pitch
  double lifi_bandwidth_hz = 20e6;
  Vec3 wifi_position{5.0, 5.0, 1.0};
  double wifi_bandwidth_hz = 20e6;
  LiFiRadioParams lifi;
  WiFiRadioParams wifi;
};

// Deterministic roster: WiFi AP first, then the n x n LiFi grid centered in
// the room at ceiling height. Throws ConfigError when the grid or the WiFi
// position falls outside the room.
NetworkTopology build_topology(const TopologyConfig& config);

}  // namespace hlwsim
