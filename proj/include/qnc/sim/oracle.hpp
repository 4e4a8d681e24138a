#pragma once

#include <cstdint>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/sim/kernels.hpp"

namespace qnc::sim {

/// Dense circuit unitary, column-major; column x is U|x> with qubit 0 as
/// the least significant bit of the basis index.
struct UnitaryMatrix {
  int qubits = 0;
  std::size_t dim = 0;
  std::vector<c64> a;

  c64& at(std::size_t row, std::size_t col) { return a[col * dim + row]; }
  const c64& at(std::size_t row, std::size_t col) const { return a[col * dim + row]; }
};

inline constexpr int kMaxUnitaryQubits = 7;
inline constexpr int kMaxStatevectorQubits = 14;

/// Product of gate matrices in circuit order. Requires m <= 7 and no
/// measurements; opaque gates have no matrix and are rejected.
UnitaryMatrix unitary(const QCircuit& c);

double frobenius_distance_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v);
bool is_unitary(const UnitaryMatrix& u, double tol = 1e-10);

/// True iff P(perm)·U_b == U_a up to global phase within tol. perm maps
/// qubit i of `a` to wire perm[i] of `b`; pass {} for identity.
bool equivalent(const QCircuit& a, const QCircuit& b, const std::vector<int>& perm,
                double tol = 1e-10);

/// Probabilistic stand-in for unitary comparison at 8..14 qubits: applies
/// both circuits to `trials` seeded random product states.
bool statevector_check(const QCircuit& a, const QCircuit& b, const std::vector<int>& perm,
                       int trials, std::uint64_t seed, double tol = 1e-8);

std::vector<c64> apply_circuit(const QCircuit& c, std::vector<c64> psi);

/// Routed-circuit check: `routed` acts on n >= m wires; virtual qubit v
/// enters on wire in_map[v] and exits on wire out_map[v], ancilla wires
/// start and end in |0>. Dense comparison, requires n <= 7.
bool routed_equivalent(const QCircuit& a, const QCircuit& routed,
                       const std::vector<int>& in_map, const std::vector<int>& out_map,
                       double tol = 1e-10);

/// Statevector version of the routed check for larger devices (n <= 24-ish).
bool routed_statevector_check(const QCircuit& a, const QCircuit& routed,
                              const std::vector<int>& in_map,
                              const std::vector<int>& out_map, int trials,
                              std::uint64_t seed, double tol = 1e-8);

}  // namespace qnc::sim
