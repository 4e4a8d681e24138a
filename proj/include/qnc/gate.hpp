#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qnc {

enum class GateKind : std::uint8_t {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Rx,
  Ry,
  Rz,
  U1,
  U2,
  U3,
  Cx,
  Swap,
  Barrier,
  Measure,
  Opaque1q,
  Opaque2q,
};

/// Qubit operand count (1 or 2).
constexpr int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::Cx:
    case GateKind::Swap:
    case GateKind::Opaque2q:
      return 2;
    case GateKind::Barrier:
      return 0;  // 1 or 2, fixed per instance
    default:
      return 1;
  }
}

/// Angle parameter count; -1 = variable (opaque).
constexpr int param_arity(GateKind k) {
  switch (k) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::U1:
      return 1;
    case GateKind::U2:
      return 2;
    case GateKind::U3:
      return 3;
    case GateKind::Opaque1q:
    case GateKind::Opaque2q:
      return -1;
    default:
      return 0;
  }
}

const char* gate_name(GateKind k);

/// One circuit instruction: kind, qubit operands, real parameters.
/// For Cx the operand order is [control, target].
struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 2> q{-1, -1};
  std::vector<double> params;
  std::string label;  // opaque gate name
  int cbit = -1;      // classical target of a measure

  int arity() const { return q[1] < 0 ? 1 : 2; }
  bool is_cx() const { return kind == GateKind::Cx; }
  bool is_two_qubit() const { return arity() == 2; }
  bool touches(int qubit) const { return q[0] == qubit || q[1] == qubit; }
  int control() const { return q[0]; }
  int target() const { return q[1]; }

  bool operator==(const Gate& o) const {
    return kind == o.kind && q == o.q && params == o.params && label == o.label &&
           cbit == o.cbit;
  }

  static Gate g1(GateKind k, int q0) {
    Gate g;
    g.kind = k;
    g.q = {q0, -1};
    return g;
  }
  static Gate g1p(GateKind k, int q0, std::vector<double> ps) {
    Gate g = g1(k, q0);
    g.params = std::move(ps);
    return g;
  }
  static Gate h(int q0) { return g1(GateKind::H, q0); }
  static Gate x(int q0) { return g1(GateKind::X, q0); }
  static Gate y(int q0) { return g1(GateKind::Y, q0); }
  static Gate z(int q0) { return g1(GateKind::Z, q0); }
  static Gate s(int q0) { return g1(GateKind::S, q0); }
  static Gate sdg(int q0) { return g1(GateKind::Sdg, q0); }
  static Gate t(int q0) { return g1(GateKind::T, q0); }
  static Gate tdg(int q0) { return g1(GateKind::Tdg, q0); }
  static Gate rx(int q0, double a) { return g1p(GateKind::Rx, q0, {a}); }
  static Gate ry(int q0, double a) { return g1p(GateKind::Ry, q0, {a}); }
  static Gate rz(int q0, double a) { return g1p(GateKind::Rz, q0, {a}); }
  static Gate u1(int q0, double a) { return g1p(GateKind::U1, q0, {a}); }
  static Gate u2(int q0, double a, double b) { return g1p(GateKind::U2, q0, {a, b}); }
  static Gate u3(int q0, double a, double b, double c) {
    return g1p(GateKind::U3, q0, {a, b, c});
  }
  static Gate cx(int c, int t) {
    Gate g;
    g.kind = GateKind::Cx;
    g.q = {c, t};
    return g;
  }
  static Gate swp(int a, int b) {
    Gate g;
    g.kind = GateKind::Swap;
    g.q = {a, b};
    return g;
  }
  static Gate barrier1(int q0) { return g1(GateKind::Barrier, q0); }
  static Gate barrier2(int a, int b) {
    Gate g;
    g.kind = GateKind::Barrier;
    g.q = {a, b};
    return g;
  }
  static Gate measure(int q0, int c) {
    Gate g = g1(GateKind::Measure, q0);
    g.cbit = c;
    return g;
  }
};

}  // namespace qnc
