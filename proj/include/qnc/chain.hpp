#pragma once

#include <vector>

#include "qnc/coupling.hpp"

namespace qnc {

/// Near-Hamiltonian path over the coupling graph. Before expansion every
/// consecutive pair of `order` is an edge; expansion may splice isolated
/// nodes in, breaking adjacency at the splice point (the router repairs it).
struct Chain {
  std::vector<int> order;
  std::vector<int> isolated;  // ascending
};

/// Injective virtual -> physical assignment; p2v is the inverse (-1 = free).
struct Layout {
  std::vector<int> v2p;
  std::vector<int> p2v;

  static Layout identity(int m, int n);
};

/// Greedy chain walk from node 0: prefer neighbor x+1, else the minimum
/// unexplored neighbor; dead-end neighbors are pruned into `isolated`; on a
/// dead end the chain tail is popped (bounded by n backtracks). If the walk
/// ends shorter than m, isolated nodes are spliced back in. Throws if m
/// nodes cannot be reached even after expansion.
Chain chain(const CouplingMap& g, int m, bool try_all_starts = false);

/// Marks every unexplored node adjacent to an isolated or chain node as
/// isolated+explored, making it eligible for expansion.
void check_for_isolated(const CouplingMap& g, const std::vector<int>& order,
                        std::vector<char>& explored, std::vector<int>& isolated);

/// Splices isolated nodes after their minimum chain-neighbor until the chain
/// reaches m nodes. Throws if the isolated pool runs out or no candidate has
/// a chain neighbor.
void expand_chain(const CouplingMap& g, std::vector<int>& order,
                  std::vector<int>& isolated, int m);

/// v2p[i] = order[i]; requires |order| >= m.
Layout initial_layout(const Chain& c, int m, int n);

}  // namespace qnc
