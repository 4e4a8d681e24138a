#pragma once

#include "qnc/circuit.hpp"

namespace qnc {

/// Removes CX pairs that are adjacent on the dependency DAG (the next gate on
/// both wires is an identical CX) until no pair remains.
QCircuit cnot_cancellation(const QCircuit& c);

/// cnot_cancellation plus removal of adjacent H-H pairs on a wire; iterated
/// to a fixed point. Monotone in gate count and idempotent.
QCircuit gate_cancellation(const QCircuit& c);

}  // namespace qnc
