#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qnc/circuit.hpp"

namespace qnc {

/// Undirected device graph over n physical qubits plus the all-pairs
/// hop-count matrix (BFS). Must be connected.
class CouplingMap {
 public:
  CouplingMap(int n, std::vector<std::pair<int, int>> edge_list);

  static CouplingMap from_file(const std::string& path);
  static CouplingMap line(int n);
  static CouplingMap star(int n);  // hub at node 0

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return dist_[u][v] == 1; }
  int dist(int u, int v) const { return dist_[u][v]; }
  const std::vector<std::vector<int>>& dist_matrix() const { return dist_; }
  const std::vector<int>& neighbors(int u) const { return nbrs_[u]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  void save(const std::string& path) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;       // unique, u < v, sorted
  std::vector<std::vector<int>> nbrs_;           // sorted adjacency lists
  std::vector<std::vector<int>> dist_;
};

/// BFS all-pairs shortest-path hop counts; throws on a disconnected graph.
std::vector<std::vector<int>> distance_matrix(int n,
                                              const std::vector<std::pair<int, int>>& edges);

}  // namespace qnc
