#pragma once

#include <utility>
#include <vector>

#include "qnc/chain.hpp"
#include "qnc/circuit.hpp"
#include "qnc/coupling.hpp"

namespace qnc {

/// Pending two-qubit gates with every predecessor already emitted.
struct FrontLayer {
  std::vector<int> gates;
};

struct RoutedCircuit {
  QCircuit circuit;      // over physical wires
  Layout final_layout;   // virtual -> physical after all swaps
  long swap_count = 0;
};

/// Heuristic cost of applying candidate swap `s`: summed post-swap distances
/// of the front-layer gates plus 0.5 times the same sum over the lookahead
/// window (gate indices into `c`).
double swap_score(const FrontLayer& f, const Layout& l, std::pair<int, int> s,
                  const CouplingMap& g, const QCircuit& c,
                  const std::vector<int>& lookahead);

/// Deterministic SABRE-style swap insertion from the given initial layout.
/// Every two-qubit gate of the result acts on a coupling edge; SWAPs are
/// tracked as IR gates (metrics count them as three CX).
RoutedCircuit route(const QCircuit& c, const Layout& l0, const CouplingMap& g);

}  // namespace qnc
