#include "hlwsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hlwsim {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

double deg2rad(double d) { return d * std::numbers::pi / 180.0; }

double lambertian_order(const LiFiRadioParams& p) {
  return -std::numbers::ln2 / std::log(std::cos(deg2rad(p.half_intensity_angle_deg)));
}

double concentrator_gain(const LiFiRadioParams& p) {
  const double s = std::sin(deg2rad(p.fov_deg));
  return p.concentrator_index * p.concentrator_index / (s * s);
}

double fspl_db(double distance_m, double freq_hz) {
  return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * freq_hz / kSpeedOfLight);
}

}  // namespace

double lifi_los_gain(const Vec3& ap_position, const Vec3& ue_position,
                     const LiFiRadioParams& params) {
  const Vec3 diff = ap_position - ue_position;
  const double d = diff.norm();
  if (d <= 0.0) throw std::invalid_argument("lifi_los_gain: AP and UE are co-located");
  const double dz = diff.z();
  if (dz <= 0.0) return 0.0;  // AP must sit above the UE plane

  const double cos_angle = dz / d;  // irradiance == incidence for down/up axes
  const double angle = std::acos(std::min(1.0, cos_angle));
  if (angle > deg2rad(params.fov_deg)) return 0.0;

  const double m = lambertian_order(params);
  return (m + 1.0) * params.pd_area_m2 / (2.0 * std::numbers::pi * d * d) *
         std::pow(cos_angle, m) * params.filter_gain * concentrator_gain(params) * cos_angle;
}

double lifi_nlos_gain(const Vec3& ap_position, const Vec3& ue_position,
                      const NetworkTopology& topo, const LiFiRadioParams& params) {
  if (params.wall_reflectivity <= 0.0) return 0.0;

  const double m = lambertian_order(params);
  const double g = concentrator_gain(params);
  const double fov = deg2rad(params.fov_deg);
  const double res = params.nlos_grid_resolution_m;

  // Wall planes: (axis, fixed coordinate, inward normal sign).
  struct Wall {
    int axis;      // 0 -> plane x = value, 1 -> plane y = value
    double value;
    double normal; // inward-facing normal component along `axis`
  };
  const Wall walls[4] = {{0, 0.0, 1.0},
                         {0, topo.room_length, -1.0},
                         {1, 0.0, 1.0},
                         {1, topo.room_width, -1.0}};

  double total = 0.0;
  for (const Wall& wall : walls) {
    const double u_len = (wall.axis == 0) ? topo.room_width : topo.room_length;
    const int nu = std::max(1, static_cast<int>(std::ceil(u_len / res)));
    const int nv = std::max(1, static_cast<int>(std::ceil(topo.room_height / res)));
    const double du = u_len / nu;
    const double dv = topo.room_height / nv;
    const double area = du * dv;

    for (int iu = 0; iu < nu; ++iu) {
      for (int iv = 0; iv < nv; ++iv) {
        const double u = (iu + 0.5) * du;
        const double v = (iv + 0.5) * dv;
        Vec3 w;
        if (wall.axis == 0) {
          w = Vec3{wall.value, u, v};
        } else {
          w = Vec3{u, wall.value, v};
        }

        const Vec3 to_wall = w - ap_position;
        const double d1 = to_wall.norm();
        if (d1 <= 0.0) continue;
        const double cos_emit = -to_wall.z() / d1;       // LED axis points down
        if (cos_emit <= 0.0) continue;
        const double cos_in1 = -to_wall[wall.axis] * wall.normal / d1;
        if (cos_in1 <= 0.0) continue;

        const Vec3 to_ue = ue_position - w;
        const double d2 = to_ue.norm();
        if (d2 <= 0.0) continue;
        const double cos_out = to_ue[wall.axis] * wall.normal / d2;
        if (cos_out <= 0.0) continue;
        const double cos_in2 = -to_ue.z() / d2;          // PD faces up
        if (cos_in2 <= 0.0) continue;
        if (std::acos(std::min(1.0, cos_in2)) > fov) continue;

        total += (m + 1.0) * params.pd_area_m2 /
                 (2.0 * std::numbers::pi * std::numbers::pi * d1 * d1 * d2 * d2) *
                 params.wall_reflectivity * area * std::pow(cos_emit, m) * cos_in1 *
                 cos_out * cos_in2 * params.filter_gain * g;
      }
    }
  }
  return total;
}

double wifi_snr(const ApDescriptor& ap, const Vec3& ue_position,
                const WiFiRadioParams& params) {
  const double d = (ap.position - ue_position).norm();
  if (d <= 0.0) throw std::invalid_argument("wifi_snr: distance must be positive");

  double pl_db = 0.0;
  if (d <= params.breakpoint_distance_m) {
    pl_db = fspl_db(d, params.carrier_freq_hz);
  } else {
    pl_db = fspl_db(params.breakpoint_distance_m, params.carrier_freq_hz) +
            10.0 * params.pathloss_exponent_after_bp *
                std::log10(d / params.breakpoint_distance_m);
  }
  const double noise_dbm = params.noise_psd_dbm_per_hz +
                           10.0 * std::log10(ap.bandwidth_hz) + params.noise_figure_db;
  const double snr_db = params.tx_power_dbm - pl_db - noise_dbm;
  return db_to_linear(snr_db);
}

Matrix sinr_matrix(const NetworkTopology& topo, const std::vector<Vec3>& ue_positions) {
  const int n_a = topo.n_aps();
  const int n_u = static_cast<int>(ue_positions.size());
  if (n_u < 1) throw std::invalid_argument("sinr_matrix: need at least one UE");

  const LiFiRadioParams& lp = topo.lifi_params;
  const double rp = lp.responsivity_a_per_w * lp.optical_tx_power_w;

  // Electrical LoS signal powers, needed again as CoChannel interference.
  Matrix los_signal = Matrix::Zero(n_a, n_u);
  Matrix sinr = Matrix::Zero(n_a, n_u);

  for (int j = 0; j < n_u; ++j) {
    for (int i = 0; i < n_a; ++i) {
      if (topo.aps[i].kind != ApKind::LiFi) continue;
      const double los = lifi_los_gain(topo.aps[i].position, ue_positions[j], lp);
      los_signal(i, j) = (rp * los) * (rp * los);
    }
  }

  for (int j = 0; j < n_u; ++j) {
    for (int i = 0; i < n_a; ++i) {
      const ApDescriptor& ap = topo.aps[i];
      if (ap.kind == ApKind::WiFi) {
        sinr(i, j) = wifi_snr(ap, ue_positions[j], topo.wifi_params);
        continue;
      }
      double h = lifi_los_gain(ap.position, ue_positions[j], lp);
      if (lp.nlos_enabled) h += lifi_nlos_gain(ap.position, ue_positions[j], topo, lp);
      const double signal = (rp * h) * (rp * h);
      double denom = lp.noise_psd_a2_per_hz * ap.bandwidth_hz;
      if (lp.interference_mode == InterferenceMode::CoChannel) {
        for (int k = 0; k < n_a; ++k) {
          if (k != i && topo.aps[k].kind == ApKind::LiFi) denom += los_signal(k, j);
        }
      }
      sinr(i, j) = signal / denom;
    }
  }
  return sinr;
}

double link_capacity(double sinr, double bandwidth_hz, ApKind kind) {
  if (sinr < 0.0) throw std::invalid_argument("link_capacity: sinr must be non-negative");
  if (kind == ApKind::LiFi) {
    return bandwidth_hz / 2.0 *
           std::log2(1.0 + std::numbers::e / (2.0 * std::numbers::pi) * sinr);
  }
  return bandwidth_hz * std::log2(1.0 + sinr);
}

ChannelState compute_channel(const NetworkTopology& topo,
                             const std::vector<Vec3>& ue_positions) {
  ChannelState state;
  state.sinr = sinr_matrix(topo, ue_positions);
  state.capacity = Matrix::Zero(state.sinr.rows(), state.sinr.cols());
  for (int i = 0; i < state.sinr.rows(); ++i) {
    for (int j = 0; j < state.sinr.cols(); ++j) {
      state.capacity(i, j) =
          link_capacity(state.sinr(i, j), topo.aps[i].bandwidth_hz, topo.aps[i].kind);
    }
  }
  return state;
}

}  // namespace hlwsim
