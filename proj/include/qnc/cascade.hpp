#pragma once

#include <optional>
#include <vector>

#include "qnc/circuit.hpp"

namespace qnc {

enum class CascadeDir { Plain, Inverted };

/// A detected CNOT cascade anchored at one CX gate. `target` is the shared
/// qubit: the common target of a fan-in (plain) or the common control of a
/// fan-out (inverted). before/after hold single-qubit gates commuted out of
/// the matched region.
struct CascadeMatch {
  int target = -1;
  std::vector<int> ctrls;   // sorted ascending, size >= 2 for rewritable matches
  std::vector<int> skip;    // consumed gate indices, ascending
  std::vector<int> before;
  std::vector<int> after;
  bool inverted = false;
  int anchor = -1;
};

/// Scans forward from the anchor CX (at most 2m layers) growing the cascade,
/// classifying independent single-qubit gates into before/after and fencing
/// conflicting qubits off. Returns nothing if fewer than two controls
/// accumulate or the anchor qubit is re-used in the opposite role.
std::optional<CascadeMatch> check_cascade(const QCircuit& c, const LayeredView& lv,
                                          int start, CascadeDir dir,
                                          const std::vector<char>* consumed = nullptr);

/// Parity-sweep nearest-neighbor form of the fan-in cascade over the match's
/// own sorted qubits: down-sweep, CX into the target, up-sweep; 2k-1 gates
/// for an end target, 2k-2 when the target sits strictly inside the sorted
/// interval. Throws if the match has fewer than two controls.
std::vector<Gate> nn_decompose(const CascadeMatch& m);

/// Replacement region for a match: hoisted before-gates, then for inverted
/// matches the H-conjugated sweep (paired H walls are left for
/// gate_cancellation), then hoisted after-gates.
std::vector<Gate> replacement_region(const QCircuit& c, const CascadeMatch& m);

/// Full-circuit rewrite of one inverted match: every CX is flipped via H
/// conjugation and the resulting fan-in cascade replaced by its sweep.
QCircuit invert_cascade_region(const QCircuit& c, const CascadeMatch& m);

/// The pattern pass: every maximal cascade (plain or inverted; the match
/// consuming more CX gates wins, ties prefer plain) replaced by its
/// nearest-neighbor decomposition. Non-matching gates keep their order.
QCircuit patterns(const QCircuit& c);

}  // namespace qnc
