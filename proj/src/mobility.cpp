#include "hlwsim/mobility.hpp"

#include <cmath>
#include <stdexcept>

#include "hlwsim/errors.hpp"

namespace hlwsim {

namespace {

Vec2 draw_waypoint(const NetworkTopology& topo, Rng& rng) {
  const double x = rng.uniform(0.0, topo.room_length);
  const double y = rng.uniform(0.0, topo.room_width);
  return Vec2{x, y};
}

void check_mobility(const MobilityConfig& m) {
  if (!(m.v_min > 0.0 && m.v_min <= m.v_max)) {
    throw ConfigError("mobility requires 0 < v_min <= v_max");
  }
  if (!(m.sample_period_s > 0.0 && m.sample_period_s <= m.duration_s)) {
    throw ConfigError("mobility requires 0 < sample_period <= duration");
  }
}

}  // namespace

std::vector<UEState> init_ues(const NetworkTopology& topo, int n_ue,
                              const MobilityConfig& mobility, Rng& rng) {
  if (n_ue < 1) throw ConfigError("init_ues: n_ue must be >= 1");
  check_mobility(mobility);

  std::vector<UEState> ues;
  ues.reserve(n_ue);
  for (int j = 0; j < n_ue; ++j) {
    UEState s;
    const Vec2 p = draw_waypoint(topo, rng);
    s.position = Vec3{p.x(), p.y(), mobility.ue_height_m};
    s.waypoint = draw_waypoint(topo, rng);
    s.speed = rng.uniform(mobility.v_min, mobility.v_max);
    ues.push_back(s);
  }
  return ues;
}

UEState rwp_step(const UEState& ue, const NetworkTopology& topo,
                 const MobilityConfig& mobility, Rng& rng) {
  UEState next = ue;
  const Vec2 here{ue.position.x(), ue.position.y()};
  const Vec2 to_wp = ue.waypoint - here;
  const double remaining = to_wp.norm();
  const double step = ue.speed * mobility.sample_period_s;

  if (remaining <= step) {
    next.position = Vec3{ue.waypoint.x(), ue.waypoint.y(), mobility.ue_height_m};
    next.waypoint = draw_waypoint(topo, rng);
    next.speed = rng.uniform(mobility.v_min, mobility.v_max);
  } else {
    const Vec2 moved = here + to_wp * (step / remaining);
    next.position = Vec3{moved.x(), moved.y(), mobility.ue_height_m};
  }
  return next;
}

}  // namespace hlwsim
