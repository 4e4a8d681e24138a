#include "qnc/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnc {

Layout Layout::identity(int m, int n) {
  Layout l;
  l.v2p.resize(m);
  l.p2v.assign(n, -1);
  for (int i = 0; i < m; ++i) {
    l.v2p[i] = i;
    l.p2v[i] = i;
  }
  return l;
}

namespace {

Chain chain_from(const CouplingMap& g, int m, int start) {
  const int n = g.size();
  std::vector<char> explored(n, 0);
  std::vector<int> isolated;
  std::vector<int> order{start};
  explored[start] = 1;
  int explored_count = 1;
  int x = start;
  int last_back_step = -1;
  int backtracks = 0;

  auto prune_dead_ends = [&](int node) {
    // A neighbor whose every other neighbor is already explored can only be
    // reached from here; set it aside for expansion instead of walking into
    // the dead end.
    for (int q : g.neighbors(node)) {
      if (explored[q]) continue;
      bool dead = true;
      for (int r : g.neighbors(q)) {
        if (r != node && !explored[r]) {
          dead = false;
          break;
        }
      }
      if (dead) {
        explored[q] = 1;
        ++explored_count;
        isolated.push_back(q);
      }
    }
  };

  if (explored_count < n - 1) prune_dead_ends(x);
  while (explored_count < n) {
    std::vector<int> fresh;
    for (int q : g.neighbors(x))
      if (!explored[q]) fresh.push_back(q);

    if (!fresh.empty()) {
      int next = fresh[0];
      if (std::find(fresh.begin(), fresh.end(), x + 1) != fresh.end()) next = x + 1;
      x = next;
      explored[x] = 1;
      ++explored_count;
      order.push_back(x);
      if (explored_count < n - 1) prune_dead_ends(x);
    } else {
      if (order.size() < 2) break;
      // Give-up test from the walk's pseudocode, plus a hard backtrack cap.
      int smallest_unexplored = -1;
      for (int v = 0; v < n; ++v) {
        if (!explored[v]) {
          smallest_unexplored = v;
          break;
        }
      }
      if (last_back_step != order[order.size() - 2] && smallest_unexplored >= 0 &&
          n - explored_count > std::abs(x - smallest_unexplored)) {
        break;
      }
      if (++backtracks > n) break;
      isolated.push_back(x);
      order.pop_back();
      x = order.back();
      last_back_step = x;
    }
  }

  if (static_cast<int>(order.size()) < m) {
    check_for_isolated(g, order, explored, isolated);
    std::sort(isolated.begin(), isolated.end());
    expand_chain(g, order, isolated, m);
  }
  std::sort(isolated.begin(), isolated.end());
  return Chain{std::move(order), std::move(isolated)};
}

}  // namespace

Chain chain(const CouplingMap& g, int m, bool try_all_starts) {
  if (m > g.size())
    throw std::invalid_argument("circuit needs more qubits than the device has");
  if (!try_all_starts) return chain_from(g, m, 0);
  Chain best;
  for (int s = 0; s < g.size(); ++s) {
    Chain c;
    try {
      c = chain_from(g, m, s);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (c.order.size() > best.order.size()) best = std::move(c);
  }
  if (static_cast<int>(best.order.size()) < m)
    throw std::runtime_error("no start node yields a chain of length " + std::to_string(m));
  return best;
}

void check_for_isolated(const CouplingMap& g, const std::vector<int>& order,
                        std::vector<char>& explored, std::vector<int>& isolated) {
  std::vector<char> in_chain(g.size(), 0);
  for (int v : order) in_chain[v] = 1;
  std::vector<char> iso(g.size(), 0);
  for (int v : isolated) iso[v] = 1;

  for (int v = 0; v < g.size(); ++v) {
    if (explored[v] || iso[v]) continue;
    bool mark = false;
    for (int u : g.neighbors(v)) {
      if (iso[u] || in_chain[u]) {
        mark = true;
        break;
      }
    }
    if (mark) {
      iso[v] = 1;
      explored[v] = 1;
      isolated.push_back(v);
    }
  }
}

void expand_chain(const CouplingMap& g, std::vector<int>& order,
                  std::vector<int>& isolated, int m) {
  int r = m - static_cast<int>(order.size());
  while (r > 0) {
    bool spliced = false;
    for (std::size_t k = 0; k < isolated.size(); ++k) {
      int cand = isolated[k];
      int best = -1;
      for (int u : g.neighbors(cand)) {
        auto it = std::find(order.begin(), order.end(), u);
        if (it != order.end() && (best < 0 || u < best)) best = u;
      }
      if (best < 0) continue;
      auto pos = std::find(order.begin(), order.end(), best);
      order.insert(pos + 1, cand);
      isolated.erase(isolated.begin() + static_cast<long>(k));
      --r;
      spliced = true;
      break;
    }
    if (!spliced)
      throw std::runtime_error("chain expansion failed: no isolated node touches the chain (" +
                               std::to_string(order.size()) + " of " + std::to_string(m) +
                               " nodes reached)");
  }
}

Layout initial_layout(const Chain& c, int m, int n) {
  if (static_cast<int>(c.order.size()) < m)
    throw std::invalid_argument("chain too short for the circuit (" +
                                std::to_string(c.order.size()) + " < " + std::to_string(m) +
                                ")");
  Layout l;
  l.v2p.resize(m);
  l.p2v.assign(n, -1);
  for (int i = 0; i < m; ++i) {
    l.v2p[i] = c.order[i];
    l.p2v[c.order[i]] = i;
  }
  return l;
}

}  // namespace qnc
