#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qnc/gate.hpp"

namespace qnc {

/// Ordered gate list over a fixed virtual-qubit register. Passes never mutate
/// a circuit in place; they build new ones, so circuits are safe to share
/// read-only across threads.
class QCircuit {
 public:
  QCircuit() = default;
  explicit QCircuit(int num_qubits, std::string name = "")
      : m_(num_qubits), name_(std::move(name)) {
    if (num_qubits < 0) throw std::invalid_argument("negative qubit count");
  }

  int num_qubits() const { return m_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void add(Gate g);

  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

 private:
  int m_ = 0;
  std::string name_;
  std::vector<Gate> gates_;
};

/// ASAP layering: every gate in the earliest layer allowed by its
/// predecessors on each operand wire. Barriers and measures participate as
/// full dependencies.
struct LayeredView {
  std::vector<std::vector<int>> layers;
  std::vector<int> layer_of;
  int count() const { return static_cast<int>(layers.size()); }
};

LayeredView layers(const QCircuit& c);

struct Metrics {
  long cnot_count = 0;
  long cnot_depth = 0;
  long total_gates = 0;
  long total_depth = 0;
};

/// CNOT count/depth as the paper measures them: SWAPs expand to three CX,
/// cnot_depth is the ASAP depth of the CX-only restriction of the circuit,
/// and barriers/measures are excluded from both depth figures.
Metrics metrics(const QCircuit& c);

}  // namespace qnc
