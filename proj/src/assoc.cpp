#include "hlwsim/assoc.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlwsim/errors.hpp"

namespace hlwsim {

std::vector<int> Association::aps_of_ue(int j) const {
  std::vector<int> out;
  for (int i = 0; i < n_aps(); ++i) {
    if (connected(i, j)) out.push_back(i);
  }
  return out;
}

std::vector<int> Association::ues_of_ap(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_ues(); ++j) {
    if (connected(i, j)) out.push_back(j);
  }
  return out;
}

namespace {

double link_quality(const ChannelState& ch, int i, int j, LinkRanking ranking) {
  return ranking == LinkRanking::Sinr ? ch.sinr(i, j) : ch.capacity(i, j);
}

}  // namespace

Association mptcp_association(const ChannelState& channel, const NetworkTopology& topo,
                              int n_f, LinkRanking ranking) {
  const int n_a = static_cast<int>(channel.sinr.rows());
  const int n_u = static_cast<int>(channel.sinr.cols());
  const int wifi = topo.wifi_index();
  if (wifi < 0) throw ConfigError("topology has no WiFi AP");
  if (n_f < 2 || n_f > 1 + topo.n_lifi()) {
    throw std::invalid_argument("mptcp_association: n_f must be in [2, 1 + #LiFi]");
  }

  Association assoc;
  assoc.chi = Matrix::Zero(n_a, n_u);
  assoc.n_subflows_per_ue = n_f;

  std::vector<int> lifi_idx;
  for (int i = 0; i < n_a; ++i) {
    if (topo.aps[i].kind == ApKind::LiFi) lifi_idx.push_back(i);
  }

  for (int j = 0; j < n_u; ++j) {
    assoc.chi(wifi, j) = 1.0;
    std::vector<int> order = lifi_idx;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return link_quality(channel, a, j, ranking) > link_quality(channel, b, j, ranking);
    });
    for (int k = 0; k < n_f - 1; ++k) assoc.chi(order[k], j) = 1.0;
  }
  return assoc;
}

Association sss_association(const ChannelState& channel, LinkRanking ranking) {
  const int n_a = static_cast<int>(channel.sinr.rows());
  const int n_u = static_cast<int>(channel.sinr.cols());
  if (n_a < 1) throw std::invalid_argument("sss_association: need at least one AP");

  Association assoc;
  assoc.chi = Matrix::Zero(n_a, n_u);
  assoc.n_subflows_per_ue = 1;

  for (int j = 0; j < n_u; ++j) {
    int best = 0;
    for (int i = 1; i < n_a; ++i) {
      if (link_quality(channel, i, j, ranking) > link_quality(channel, best, j, ranking)) {
        best = i;
      }
    }
    assoc.chi(best, j) = 1.0;
  }
  return assoc;
}

}  // namespace hlwsim
