#include "qnc/sim/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qnc::sim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Row-major 2x2 matrix for a single-qubit kind.
void gate_matrix_1q(const Gate& g, c64 m[4]) {
  const c64 i1(0, 1);
  switch (g.kind) {
    case GateKind::H:
      m[0] = kInvSqrt2; m[1] = kInvSqrt2;
      m[2] = kInvSqrt2; m[3] = -kInvSqrt2;
      return;
    case GateKind::X:
      m[0] = 0; m[1] = 1; m[2] = 1; m[3] = 0;
      return;
    case GateKind::Y:
      m[0] = 0; m[1] = -i1; m[2] = i1; m[3] = 0;
      return;
    case GateKind::Z:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = -1;
      return;
    case GateKind::S:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = i1;
      return;
    case GateKind::Sdg:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = -i1;
      return;
    case GateKind::T:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = std::exp(i1 * (M_PI / 4));
      return;
    case GateKind::Tdg:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = std::exp(-i1 * (M_PI / 4));
      return;
    case GateKind::Rx: {
      double t = g.params[0] / 2;
      m[0] = std::cos(t); m[1] = -i1 * std::sin(t);
      m[2] = -i1 * std::sin(t); m[3] = std::cos(t);
      return;
    }
    case GateKind::Ry: {
      double t = g.params[0] / 2;
      m[0] = std::cos(t); m[1] = -std::sin(t);
      m[2] = std::sin(t); m[3] = std::cos(t);
      return;
    }
    case GateKind::Rz: {
      double t = g.params[0] / 2;
      m[0] = std::exp(-i1 * t); m[1] = 0;
      m[2] = 0; m[3] = std::exp(i1 * t);
      return;
    }
    case GateKind::U1:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = std::exp(i1 * g.params[0]);
      return;
    case GateKind::U2: {
      double phi = g.params[0], lam = g.params[1];
      m[0] = kInvSqrt2;
      m[1] = -kInvSqrt2 * std::exp(i1 * lam);
      m[2] = kInvSqrt2 * std::exp(i1 * phi);
      m[3] = kInvSqrt2 * std::exp(i1 * (phi + lam));
      return;
    }
    case GateKind::U3: {
      double th = g.params[0] / 2, phi = g.params[1], lam = g.params[2];
      m[0] = std::cos(th);
      m[1] = -std::sin(th) * std::exp(i1 * lam);
      m[2] = std::sin(th) * std::exp(i1 * phi);
      m[3] = std::cos(th) * std::exp(i1 * (phi + lam));
      return;
    }
    default:
      throw std::invalid_argument(std::string("no matrix for gate ") + gate_name(g.kind));
  }
}

void apply_gate(const Kernels& k, c64* psi, std::size_t dim, const Gate& g) {
  switch (g.kind) {
    case GateKind::Barrier:
      return;
    case GateKind::Measure:
      throw std::invalid_argument("cannot simulate a circuit with measurements");
    case GateKind::Opaque1q:
    case GateKind::Opaque2q:
      throw std::invalid_argument("cannot simulate opaque gate '" + g.label + "'");
    case GateKind::Cx:
      k.apply_cx(psi, dim, g.q[0], g.q[1]);
      return;
    case GateKind::Swap:
      k.apply_cx(psi, dim, g.q[0], g.q[1]);
      k.apply_cx(psi, dim, g.q[1], g.q[0]);
      k.apply_cx(psi, dim, g.q[0], g.q[1]);
      return;
    default: {
      c64 m[4];
      gate_matrix_1q(g, m);
      k.apply_1q(psi, dim, g.q[0], m);
      return;
    }
  }
}

std::size_t permute_index(std::size_t x, const std::vector<int>& perm) {
  if (perm.empty()) return x;
  std::size_t y = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (x & (std::size_t(1) << i)) y |= std::size_t(1) << perm[i];
  return y;
}

std::vector<c64> random_product_state(int qubits, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<c64> psi(std::size_t(1) << qubits);
  psi[0] = 1.0;
  const Kernels& k = active_kernels();
  for (int q = 0; q < qubits; ++q) {
    double th = std::acos(1 - 2 * uni(rng));
    double ph = 2 * M_PI * uni(rng);
    c64 m[4] = {std::cos(th / 2), -std::sin(th / 2) * std::exp(c64(0, -ph)),
                std::sin(th / 2) * std::exp(c64(0, ph)), std::cos(th / 2)};
    k.apply_1q(psi.data(), psi.size(), q, m);
  }
  return psi;
}

// ||u - phase*v|| with the phase fixed by v's largest-magnitude entry.
double vec_distance_up_to_phase(const std::vector<c64>& u, const std::vector<c64>& v) {
  std::size_t best = 0;
  double mag = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double m = std::abs(v[i]);
    if (m > mag) {
      mag = m;
      best = i;
    }
  }
  c64 phase = mag > 1e-14 ? u[best] / v[best] : c64(1, 0);
  double ap = std::abs(phase);
  if (ap > 1e-14) phase /= ap;
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    c64 d = u[i] - phase * v[i];
    s += std::norm(d);
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<c64> apply_circuit(const QCircuit& c, std::vector<c64> psi) {
  const Kernels& k = active_kernels();
  for (const Gate& g : c) apply_gate(k, psi.data(), psi.size(), g);
  return psi;
}

UnitaryMatrix unitary(const QCircuit& c) {
  if (c.num_qubits() > kMaxUnitaryQubits)
    throw std::invalid_argument("unitary(): circuit too wide (max 7 qubits)");
  UnitaryMatrix u;
  u.qubits = c.num_qubits();
  u.dim = std::size_t(1) << c.num_qubits();
  u.a.assign(u.dim * u.dim, c64(0, 0));
  for (std::size_t col = 0; col < u.dim; ++col) u.at(col, col) = 1.0;
  const Kernels& k = active_kernels();
  for (const Gate& g : c)
    for (std::size_t col = 0; col < u.dim; ++col)
      apply_gate(k, u.a.data() + col * u.dim, u.dim, g);
  return u;
}

bool is_unitary(const UnitaryMatrix& u, double tol) {
  // ||U†U - I||_F
  double s = 0;
  for (std::size_t i = 0; i < u.dim; ++i) {
    for (std::size_t j = 0; j < u.dim; ++j) {
      c64 dot(0, 0);
      for (std::size_t r = 0; r < u.dim; ++r) dot += std::conj(u.at(r, i)) * u.at(r, j);
      if (i == j) dot -= 1.0;
      s += std::norm(dot);
    }
  }
  return std::sqrt(s) < tol;
}

double frobenius_distance_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  return vec_distance_up_to_phase(u.a, v.a);
}

bool equivalent(const QCircuit& a, const QCircuit& b, const std::vector<int>& perm,
                double tol) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("equivalent(): qubit count mismatch");
  UnitaryMatrix ua = unitary(a);
  UnitaryMatrix ub = unitary(b);
  if (!perm.empty()) {
    UnitaryMatrix pb = ub;
    for (std::size_t col = 0; col < ub.dim; ++col)
      for (std::size_t row = 0; row < ub.dim; ++row)
        pb.at(permute_index(row, perm), col) = ub.at(row, col);
    ub = std::move(pb);
  }
  return frobenius_distance_up_to_phase(ua, ub) < tol;
}

bool statevector_check(const QCircuit& a, const QCircuit& b, const std::vector<int>& perm,
                       int trials, std::uint64_t seed, double tol) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("statevector_check(): qubit count mismatch");
  if (a.num_qubits() > kMaxStatevectorQubits)
    throw std::invalid_argument("statevector_check(): circuit too wide (max 14 qubits)");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<c64> psi = random_product_state(a.num_qubits(), rng);
    std::vector<c64> va = apply_circuit(a, psi);
    std::vector<c64> vb = apply_circuit(b, std::move(psi));
    if (!perm.empty()) {
      std::vector<c64> pv(vb.size());
      for (std::size_t i = 0; i < vb.size(); ++i) pv[permute_index(i, perm)] = vb[i];
      vb = std::move(pv);
    }
    if (vec_distance_up_to_phase(va, vb) >= tol) return false;
  }
  return true;
}

namespace {

// Statevector comparison of a routed circuit against the virtual circuit for
// one virtual input state: embed via in_map, run, compare via out_map.
bool routed_one_state(const QCircuit& a, const QCircuit& routed,
                      const std::vector<int>& in_map, const std::vector<int>& out_map,
                      std::vector<c64> psi_virtual, double tol) {
  const int m = a.num_qubits();
  const int n = routed.num_qubits();
  const std::size_t dimv = std::size_t(1) << m;
  std::vector<c64> wire(std::size_t(1) << n, c64(0, 0));
  for (std::size_t x = 0; x < dimv; ++x) {
    std::size_t y = 0;
    for (int v = 0; v < m; ++v)
      if (x & (std::size_t(1) << v)) y |= std::size_t(1) << in_map[v];
    wire[y] = psi_virtual[x];
  }
  std::vector<c64> out_wire = apply_circuit(routed, std::move(wire));
  std::vector<c64> expect_v = apply_circuit(a, std::move(psi_virtual));
  std::vector<c64> expect(out_wire.size(), c64(0, 0));
  for (std::size_t x = 0; x < dimv; ++x) {
    std::size_t y = 0;
    for (int v = 0; v < m; ++v)
      if (x & (std::size_t(1) << v)) y |= std::size_t(1) << out_map[v];
    expect[y] = expect_v[x];
  }
  return vec_distance_up_to_phase(expect, out_wire) < tol;
}

}  // namespace

bool routed_equivalent(const QCircuit& a, const QCircuit& routed,
                       const std::vector<int>& in_map, const std::vector<int>& out_map,
                       double tol) {
  if (routed.num_qubits() > kMaxUnitaryQubits)
    throw std::invalid_argument("routed_equivalent(): device too wide for dense check");
  const std::size_t dimv = std::size_t(1) << a.num_qubits();
  // Column-wise comparison is a Frobenius check of the embedded unitary.
  double total = 0;
  for (std::size_t x = 0; x < dimv; ++x) {
    std::vector<c64> col(dimv, c64(0, 0));
    col[x] = 1.0;
    if (!routed_one_state(a, routed, in_map, out_map, std::move(col), tol)) return false;
  }
  (void)total;
  // Phase consistency across columns: compare one superposition column.
  std::vector<c64> sup(dimv, c64(0, 0));
  double amp = 1.0 / std::sqrt(double(dimv));
  for (std::size_t x = 0; x < dimv; ++x) sup[x] = amp;
  return routed_one_state(a, routed, in_map, out_map, std::move(sup), tol);
}

bool routed_statevector_check(const QCircuit& a, const QCircuit& routed,
                              const std::vector<int>& in_map,
                              const std::vector<int>& out_map, int trials,
                              std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<c64> psi = random_product_state(a.num_qubits(), rng);
    if (!routed_one_state(a, routed, in_map, out_map, std::move(psi), tol)) return false;
  }
  return true;
}

}  // namespace qnc::sim
