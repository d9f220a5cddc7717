#pragma once

#include <vector>

#include "hlwsim/channel.hpp"
#include "hlwsim/topology.hpp"
#include "hlwsim/types.hpp"

namespace hlwsim {

// Subflow connection matrix. Columns are UEs; entries are 0/1.
struct Association {
  Matrix chi;                 // N_a x N_u
  int n_subflows_per_ue = 1;  // N_f under MPTCP, 1 under TCP

  int n_aps() const { return static_cast<int>(chi.rows()); }
  int n_ues() const { return static_cast<int>(chi.cols()); }
  bool connected(int i, int j) const { return chi(i, j) != 0.0; }

  // S_j: connected AP indices of UE j, ascending.
  std::vector<int> aps_of_ue(int j) const;
  // U_i: UE indices served by AP i, ascending.
  std::vector<int> ues_of_ap(int i) const;
};

enum class LinkRanking { Sinr, Capacity };

// Each UE gets the WiFi AP plus the n_f - 1 LiFi links of best channel
// quality (ties to the lowest AP index). Zero-SINR LiFi links may be picked
// when fewer positive ones exist. Requires 2 <= n_f <= 1 + #LiFi.
Association mptcp_association(const ChannelState& channel, const NetworkTopology& topo,
                              int n_f, LinkRanking ranking = LinkRanking::Sinr);

// TCP baseline: one link per UE at the AP of best channel quality; ties and
// the all-zero column go to the lowest AP index.
Association sss_association(const ChannelState& channel,
                            LinkRanking ranking = LinkRanking::Sinr);

}  // namespace hlwsim
