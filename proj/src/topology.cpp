#include "hlwsim/topology.hpp"

#include <string>

#include "hlwsim/errors.hpp"

namespace hlwsim {

int NetworkTopology::wifi_index() const {
  for (int i = 0; i < n_aps(); ++i) {
    if (aps[i].kind == ApKind::WiFi) return i;
  }
  return -1;
}

NetworkTopology build_topology(const TopologyConfig& config) {
  if (config.room_length <= 0 || config.room_width <= 0 || config.room_height <= 0) {
    throw ConfigError("room dimensions must be positive");
  }
  if (config.lifi_grid_dim < 1) throw ConfigError("lifi_grid_dim must be >= 1");
  if (config.lifi_separation_m <= 0) throw ConfigError("lifi_separation_m must be positive");
  if (config.lifi_bandwidth_hz <= 0 || config.wifi_bandwidth_hz <= 0) {
    throw ConfigError("AP bandwidth must be positive");
  }

  const int n = config.lifi_grid_dim;
  const double span_x = (n - 1) * config.lifi_separation_m;
  const double span_y = (n - 1) * config.lifi_separation_m;
  const double off_x = (config.room_length - span_x) / 2.0;
  const double off_y = (config.room_width - span_y) / 2.0;
  if (off_x < 0.0 || off_y < 0.0) {
    throw ConfigError("LiFi grid of " + std::to_string(n) + "x" + std::to_string(n) +
                      " at separation " + std::to_string(config.lifi_separation_m) +
                      " m does not fit inside the room footprint");
  }

  NetworkTopology topo;
  topo.room_length = config.room_length;
  topo.room_width = config.room_width;
  topo.room_height = config.room_height;
  topo.lifi_params = config.lifi;
  topo.wifi_params = config.wifi;

  const Vec3& w = config.wifi_position;
  if (!topo.inside_footprint(w.x(), w.y()) || w.z() < 0.0 || w.z() > config.room_height) {
    throw ConfigError("WiFi AP position lies outside the room box");
  }
  topo.aps.push_back({ApKind::WiFi, w, config.wifi_bandwidth_hz});

  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const Vec3 p{off_x + col * config.lifi_separation_m,
                   off_y + row * config.lifi_separation_m, config.room_height};
      topo.aps.push_back({ApKind::LiFi, p, config.lifi_bandwidth_hz});
    }
  }
  return topo;
}

}  // namespace hlwsim
