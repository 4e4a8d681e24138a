#pragma once

#include <cstdint>
#include <vector>

#include "qnc/circuit.hpp"

namespace qnc {

/// Hardware-efficient RyRz ansatz with full entanglement: an RY+RZ rotation
/// layer pair, then `blocks` repetitions of [all-pairs CX block, RY layer,
/// RZ layer]. The CX block is grouped as fan-out cascades by ascending
/// control (control i targets i+1..m-1); `fan_in` flips the grouping to
/// fan-in cascades by ascending target.
struct RyRzSpec {
  int qubits = 0;
  int blocks = 0;
  std::vector<double> angles;  // 2*qubits*(blocks+1), RY row then RZ row per layer pair
  std::uint64_t seed = 0;
  bool fan_in = false;

  std::size_t angle_count() const {
    return static_cast<std::size_t>(2) * qubits * (blocks + 1);
  }

  /// Seeded uniform angles in [0, 2pi).
  static RyRzSpec random(int qubits, int blocks, std::uint64_t seed, bool fan_in = false);
};

QCircuit gen_ryrz(const RyRzSpec& spec);

}  // namespace qnc
