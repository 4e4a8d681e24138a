#include "qnc/coupling.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qnc {

std::vector<std::vector<int>> distance_matrix(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> nbrs(n);
  for (auto [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : nbrs[u]) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          q.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (dist[s][v] < 0) throw std::invalid_argument("coupling map is disconnected");
  }
  return dist;
}

CouplingMap::CouplingMap(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n <= 0) throw std::invalid_argument("coupling map needs at least one qubit");
  for (auto& [u, v] : edge_list) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("bad edge in coupling map");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges_ = std::move(edge_list);
  nbrs_.resize(n);
  for (auto [u, v] : edges_) {
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& l : nbrs_) std::sort(l.begin(), l.end());
  dist_ = distance_matrix(n_, edges_);
}

CouplingMap CouplingMap::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coupling map " + path);
  int n;
  if (!(in >> n)) throw std::runtime_error("coupling map " + path + ": missing size");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return CouplingMap(n, std::move(edges));
}

CouplingMap CouplingMap::line(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return CouplingMap(n, std::move(e));
}

CouplingMap CouplingMap::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return CouplingMap(n, std::move(e));
}

void CouplingMap::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << n_ << "\n";
  for (auto [u, v] : edges_) out << u << " " << v << "\n";
}

}  // namespace qnc
