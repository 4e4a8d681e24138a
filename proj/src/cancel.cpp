#include "qnc/cancel.hpp"

#include <vector>

namespace qnc {

namespace {

QCircuit cancel_pairs(const QCircuit& c, bool with_h) {
  std::vector<Gate> gs(c.gates().begin(), c.gates().end());
  std::vector<char> alive(gs.size(), 1);
  const int m = c.num_qubits();

  bool changed = true;
  while (changed) {
    changed = false;
    // Successor of each live gate on each wire.
    std::vector<int> next_on_wire(gs.size() * 2, -1);
    std::vector<int> last_seen(m, -1);
    std::vector<int> last_slot(m, -1);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!alive[i]) continue;
      for (int k = 0; k < gs[i].arity(); ++k) {
        int w = gs[i].q[k];
        if (last_seen[w] >= 0) next_on_wire[last_seen[w] * 2 + last_slot[w]] = static_cast<int>(i);
        last_seen[w] = static_cast<int>(i);
        last_slot[w] = k;
      }
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!alive[i]) continue;
      const Gate& g = gs[i];
      if (g.is_cx()) {
        int n0 = next_on_wire[i * 2 + 0];
        int n1 = next_on_wire[i * 2 + 1];
        if (n0 >= 0 && n0 == n1 && alive[n0] && gs[n0].is_cx() && gs[n0].q == g.q) {
          alive[i] = alive[n0] = 0;
          changed = true;
        }
      } else if (with_h && g.kind == GateKind::H) {
        int n0 = next_on_wire[i * 2 + 0];
        if (n0 >= 0 && alive[n0] && gs[n0].kind == GateKind::H) {
          alive[i] = alive[n0] = 0;
          changed = true;
        }
      }
    }
  }

  QCircuit out(c.num_qubits(), c.name());
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (alive[i]) out.add(std::move(gs[i]));
  return out;
}

}  // namespace

QCircuit cnot_cancellation(const QCircuit& c) { return cancel_pairs(c, false); }

QCircuit gate_cancellation(const QCircuit& c) { return cancel_pairs(c, true); }

}  // namespace qnc
