#include "qnc/route.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnc {

namespace {

bool needs_coupling(const Gate& g) {
  return g.arity() == 2 && g.kind != GateKind::Barrier;
}

int mapped(const Layout& l, std::pair<int, int> swap_edge, int v) {
  int p = l.v2p[v];
  if (p == swap_edge.first) return swap_edge.second;
  if (p == swap_edge.second) return swap_edge.first;
  return p;
}

}  // namespace

double swap_score(const FrontLayer& f, const Layout& l, std::pair<int, int> s,
                  const CouplingMap& g, const QCircuit& c,
                  const std::vector<int>& lookahead) {
  double score = 0;
  for (int gi : f.gates)
    score += g.dist(mapped(l, s, c[gi].q[0]), mapped(l, s, c[gi].q[1]));
  for (int gi : lookahead)
    score += 0.5 * g.dist(mapped(l, s, c[gi].q[0]), mapped(l, s, c[gi].q[1]));
  return score;
}

RoutedCircuit route(const QCircuit& c, const Layout& l0, const CouplingMap& g) {
  const int m = c.num_qubits();
  const int n = g.size();
  if (static_cast<int>(l0.v2p.size()) < m)
    throw std::invalid_argument("route: layout does not cover the circuit");

  Layout l;
  l.v2p = l0.v2p;
  l.p2v.assign(n, -1);
  for (int v = 0; v < m; ++v) {
    int p = l.v2p[v];
    if (p < 0 || p >= n || l.p2v[p] >= 0)
      throw std::invalid_argument("route: layout is not injective into the device");
    l.p2v[p] = v;
  }

  // Per-wire gate queues; a gate is ready when it heads the queue of every
  // wire it touches.
  std::vector<std::vector<int>> wire_gates(m);
  for (std::size_t gi = 0; gi < c.size(); ++gi)
    for (int k = 0; k < c[gi].arity(); ++k)
      wire_gates[c[gi].q[k]].push_back(static_cast<int>(gi));
  std::vector<std::size_t> head(m, 0);

  auto ready = [&](int gi) {
    const Gate& gg = c[gi];
    for (int k = 0; k < gg.arity(); ++k) {
      int w = gg.q[k];
      if (head[w] >= wire_gates[w].size() || wire_gates[w][head[w]] != gi) return false;
    }
    return true;
  };

  RoutedCircuit out;
  out.circuit = QCircuit(n, c.name());
  std::vector<char> emitted(c.size(), 0);
  std::size_t emitted_count = 0;

  auto emit = [&](int gi) {
    Gate gg = c[gi];
    for (int k = 0; k < gg.arity(); ++k) {
      int w = gg.q[k];
      gg.q[k] = l.v2p[w];
      ++head[w];
    }
    out.circuit.add(std::move(gg));
    emitted[gi] = 1;
    ++emitted_count;
  };

  auto apply_swap = [&](int pa, int pb) {
    out.circuit.add(Gate::swp(pa, pb));
    ++out.swap_count;
    int va = l.p2v[pa], vb = l.p2v[pb];
    l.p2v[pa] = vb;
    l.p2v[pb] = va;
    if (va >= 0) l.v2p[va] = pb;
    if (vb >= 0) l.v2p[vb] = pa;
  };

  int swaps_since_progress = 0;
  while (emitted_count < c.size()) {
    // Flush everything executable.
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<int> front;
      for (int w = 0; w < m; ++w)
        if (head[w] < wire_gates[w].size()) front.push_back(wire_gates[w][head[w]]);
      std::sort(front.begin(), front.end());
      front.erase(std::unique(front.begin(), front.end()), front.end());
      for (int gi : front) {
        if (emitted[gi] || !ready(gi)) continue;
        const Gate& gg = c[gi];
        if (needs_coupling(gg) && !g.adjacent(l.v2p[gg.q[0]], l.v2p[gg.q[1]])) continue;
        emit(gi);
        progress = true;
        swaps_since_progress = 0;
      }
    }
    if (emitted_count == c.size()) break;

    // Blocked: every ready two-qubit gate is non-adjacent.
    FrontLayer f;
    for (int w = 0; w < m; ++w) {
      if (head[w] >= wire_gates[w].size()) continue;
      int gi = wire_gates[w][head[w]];
      if (!emitted[gi] && ready(gi) && needs_coupling(c[gi])) f.gates.push_back(gi);
    }
    std::sort(f.gates.begin(), f.gates.end());
    f.gates.erase(std::unique(f.gates.begin(), f.gates.end()), f.gates.end());
    if (f.gates.empty())
      throw std::logic_error("route: stalled with no pending two-qubit gate");

    if (swaps_since_progress >= n) {
      // Deadlock guard: walk the oldest blocked gate together along a
      // shortest path.
      const Gate& gg = c[f.gates.front()];
      while (g.dist(l.v2p[gg.q[0]], l.v2p[gg.q[1]]) > 1) {
        int pc = l.v2p[gg.q[0]], pt = l.v2p[gg.q[1]];
        int step = -1;
        for (int nb : g.neighbors(pc)) {
          if (g.dist(nb, pt) == g.dist(pc, pt) - 1 && (step < 0 || nb < step)) step = nb;
        }
        apply_swap(std::min(pc, step), std::max(pc, step));
      }
      swaps_since_progress = 0;
      continue;
    }

    // Candidate swaps: coupling edges touching a front-layer qubit.
    std::vector<char> active(n, 0);
    for (int gi : f.gates) {
      active[l.v2p[c[gi].q[0]]] = 1;
      active[l.v2p[c[gi].q[1]]] = 1;
    }
    std::vector<int> lookahead;
    for (std::size_t gi = 0; gi < c.size() && lookahead.size() < 20; ++gi) {
      if (emitted[gi] || !needs_coupling(c[gi])) continue;
      if (std::find(f.gates.begin(), f.gates.end(), static_cast<int>(gi)) != f.gates.end())
        continue;
      lookahead.push_back(static_cast<int>(gi));
    }

    std::pair<int, int> best{-1, -1};
    double best_score = 0;
    for (auto e : g.edges()) {
      if (!active[e.first] && !active[e.second]) continue;
      double s = swap_score(f, l, e, g, c, lookahead);
      if (best.first < 0 || s < best_score) {
        best = e;
        best_score = s;
      }
    }
    if (best.first < 0) throw std::logic_error("route: no candidate swap");
    apply_swap(best.first, best.second);
    ++swaps_since_progress;
  }

  out.final_layout.v2p = l.v2p;
  out.final_layout.p2v = l.p2v;
  return out;
}

}  // namespace qnc
