#pragma once

#include <cstdint>
#include <vector>

#include "hlwsim/rng.hpp"
#include "hlwsim/topology.hpp"
#include "hlwsim/types.hpp"

namespace hlwsim {

struct MobilityConfig {
  double v_min = 0.5;   // m/s
  double v_max = 5.0;   // m/s
  double sample_period_s = 0.1;
  double duration_s = 500.0;
  double ue_height_m = 0.5;
  std::uint64_t seed = 1;
};

struct UEState {
  Vec3 position;  // z fixed to ue_height_m
  Vec2 waypoint;
  double speed;   // m/s, in [v_min, v_max]
};

// Uniform i.i.d. positions over the footprint; waypoint and speed drawn as in
// a fresh random-waypoint leg. Throws on n_ue < 1 or an invalid speed range.
std::vector<UEState> init_ues(const NetworkTopology& topo, int n_ue,
                              const MobilityConfig& mobility, Rng& rng);

// One random-waypoint step of length speed * sample_period. On arrival
// (remaining distance <= step) the UE lands on the waypoint and draws a new
// uniform waypoint and speed; there is no pause time.
UEState rwp_step(const UEState& ue, const NetworkTopology& topo,
                 const MobilityConfig& mobility, Rng& rng);

}  // namespace hlwsim
