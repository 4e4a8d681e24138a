#include "qnc/circuit.hpp"

#include <algorithm>

namespace qnc {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
    case GateKind::Cx: return "cx";
    case GateKind::Swap: return "swap";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
    case GateKind::Opaque1q:
    case GateKind::Opaque2q: return "opaque";
  }
  return "?";
}

void QCircuit::add(Gate g) {
  const int n = g.arity();
  for (int i = 0; i < n; ++i) {
    if (g.q[i] < 0 || g.q[i] >= m_)
      throw std::out_of_range("gate operand out of range: q" + std::to_string(g.q[i]));
  }
  if (n == 2 && g.q[0] == g.q[1])
    throw std::invalid_argument("gate operands must be distinct");
  const int pa = param_arity(g.kind);
  if (pa >= 0 && static_cast<int>(g.params.size()) != pa)
    throw std::invalid_argument(std::string("wrong parameter count for ") + gate_name(g.kind));
  gates_.push_back(std::move(g));
}

LayeredView layers(const QCircuit& c) {
  LayeredView lv;
  lv.layer_of.resize(c.size());
  std::vector<int> wire_depth(c.num_qubits(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    int l = 0;
    for (int k = 0; k < g.arity(); ++k) l = std::max(l, wire_depth[g.q[k]]);
    lv.layer_of[i] = l;
    for (int k = 0; k < g.arity(); ++k) wire_depth[g.q[k]] = l + 1;
    if (static_cast<int>(lv.layers.size()) <= l) lv.layers.resize(l + 1);
    lv.layers[l].push_back(static_cast<int>(i));
  }
  return lv;
}

namespace {

// ASAP depth of a gate subsequence, expanding SWAP to three sequential CX.
long asap_depth(const QCircuit& c, bool cx_only) {
  std::vector<int> wire_depth(c.num_qubits(), 0);
  long depth = 0;
  auto place = [&](int a, int b, int span) {
    int l = std::max(wire_depth[a], b >= 0 ? wire_depth[b] : 0);
    l += span;
    wire_depth[a] = l;
    if (b >= 0) wire_depth[b] = l;
    depth = std::max(depth, static_cast<long>(l));
  };
  for (const Gate& g : c) {
    if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
    if (g.kind == GateKind::Swap) {
      place(g.q[0], g.q[1], 3);
      continue;
    }
    if (cx_only && !g.is_cx()) continue;
    place(g.q[0], g.arity() == 2 ? g.q[1] : -1, 1);
  }
  return depth;
}

}  // namespace

Metrics metrics(const QCircuit& c) {
  Metrics m;
  m.total_gates = static_cast<long>(c.size());
  for (const Gate& g : c) {
    if (g.is_cx()) ++m.cnot_count;
    if (g.kind == GateKind::Swap) m.cnot_count += 3;
  }
  m.cnot_depth = asap_depth(c, true);
  m.total_depth = asap_depth(c, false);
  return m;
}

}  // namespace qnc
