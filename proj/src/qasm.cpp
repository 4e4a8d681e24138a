#include "qnc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace qnc {

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void advance(char ch) {
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < src.size()) {
      char ch = src[pos];
      if (ch == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        while (pos < src.size() && src[pos] != '\n') advance(src[pos]);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance(ch);
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  bool try_consume(char ch) {
    if (peek() != ch) return false;
    advance(ch);
    return true;
  }

  void expect(char ch) {
    if (!try_consume(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
      advance(src[pos]);
    }
    if (start == pos) fail("expected identifier");
    return std::string(src.substr(start, pos - start));
  }

  bool ident_ahead() {
    char ch = peek();
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      advance(src[pos]);
    if (start == pos) fail("expected integer");
    return std::stol(std::string(src.substr(start, pos - start)));
  }

  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.' ||
            src[pos] == 'e' || src[pos] == 'E' ||
            ((src[pos] == '+' || src[pos] == '-') && pos > start &&
             (src[pos - 1] == 'e' || src[pos - 1] == 'E')))) {
      advance(src[pos]);
    }
    if (start == pos) fail("expected number");
    return std::stod(std::string(src.substr(start, pos - start)));
  }

  std::string string_lit() {
    expect('"');
    std::size_t start = pos;
    while (pos < src.size() && src[pos] != '"') advance(src[pos]);
    if (pos >= src.size()) fail("unterminated string");
    std::string s(src.substr(start, pos - start));
    advance('"');
    return s;
  }
};

// Parameter expressions: numbers, pi, + - * / ^, unary minus, parentheses.
struct ExprParser {
  Lexer& lx;

  double parse() { return add_expr(); }

  double add_expr() {
    double v = mul_expr();
    for (;;) {
      if (lx.try_consume('+')) v += mul_expr();
      else if (lx.try_consume('-')) v -= mul_expr();
      else return v;
    }
  }

  double mul_expr() {
    double v = pow_expr();
    for (;;) {
      if (lx.try_consume('*')) v *= pow_expr();
      else if (lx.try_consume('/')) v /= pow_expr();
      else return v;
    }
  }

  double pow_expr() {
    double v = unary();
    if (lx.try_consume('^')) return std::pow(v, pow_expr());
    return v;
  }

  double unary() {
    if (lx.try_consume('-')) return -unary();
    if (lx.try_consume('+')) return unary();
    if (lx.try_consume('(')) {
      double v = add_expr();
      lx.expect(')');
      return v;
    }
    if (lx.ident_ahead()) {
      std::string id = lx.ident();
      if (id == "pi") return M_PI;
      if (id == "sin" || id == "cos" || id == "tan" || id == "exp" || id == "ln" ||
          id == "sqrt") {
        lx.expect('(');
        double v = add_expr();
        lx.expect(')');
        if (id == "sin") return std::sin(v);
        if (id == "cos") return std::cos(v);
        if (id == "tan") return std::tan(v);
        if (id == "exp") return std::exp(v);
        if (id == "ln") return std::log(v);
        return std::sqrt(v);
      }
      lx.fail("unknown symbol in expression: " + id);
    }
    return lx.number();
  }
};

std::optional<GateKind> std_gate(const std::string& name) {
  static const std::map<std::string, GateKind> k = {
      {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},
      {"z", GateKind::Z},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
      {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rx", GateKind::Rx},
      {"ry", GateKind::Ry},   {"rz", GateKind::Rz},   {"u1", GateKind::U1},
      {"u2", GateKind::U2},   {"u3", GateKind::U3},   {"u", GateKind::U3},
      {"U", GateKind::U3},    {"cx", GateKind::Cx},   {"CX", GateKind::Cx},
      {"cnot", GateKind::Cx}, {"swap", GateKind::Swap}};
  auto it = k.find(name);
  if (it == k.end()) return std::nullopt;
  return it->second;
}

// Gates known to be three-or-more-qubit in qelib1; anything else unknown is
// assumed 1q/2q by operand count.
bool known_multiqubit(const std::string& name) {
  return name == "ccx" || name == "cswap" || name == "c3x" || name == "c4x" ||
         name == "rccx" || name == "rc3x" || name == "mcx";
}

struct Operand {
  int index = -1;  // -1 = whole register
};

}  // namespace

QCircuit parse_qasm(std::string_view text, std::string name) {
  Lexer lx{text};

  std::string qreg_name;
  int qreg_size = -1;
  std::string creg_name;
  int creg_size = 0;
  std::vector<Gate> pending;

  auto parse_operand = [&](bool quantum) -> Operand {
    std::string reg = lx.ident();
    if (quantum) {
      if (qreg_size < 0) lx.fail("gate before qreg declaration");
      if (reg != qreg_name) lx.fail("undeclared register: " + reg);
    } else {
      if (reg != creg_name) lx.fail("undeclared register: " + reg);
    }
    Operand op;
    if (lx.try_consume('[')) {
      op.index = static_cast<int>(lx.integer());
      lx.expect(']');
      int limit = quantum ? qreg_size : creg_size;
      if (op.index >= limit) lx.fail("register index out of range");
    }
    return op;
  };

  // OPENQASM header is optional on input.
  while (!lx.eof()) {
    std::string id = lx.ident();
    if (id == "OPENQASM") {
      lx.number();
      lx.expect(';');
    } else if (id == "include") {
      lx.string_lit();
      lx.expect(';');
    } else if (id == "qreg") {
      if (qreg_size >= 0) lx.fail("multiple quantum registers are not supported");
      qreg_name = lx.ident();
      lx.expect('[');
      qreg_size = static_cast<int>(lx.integer());
      lx.expect(']');
      lx.expect(';');
    } else if (id == "creg") {
      creg_name = lx.ident();
      lx.expect('[');
      creg_size = static_cast<int>(lx.integer());
      lx.expect(']');
      lx.expect(';');
    } else if (id == "gate" || id == "if" || id == "opaque" || id == "reset") {
      lx.fail("unsupported statement: " + id);
    } else if (id == "barrier") {
      std::vector<int> qs;
      for (;;) {
        Operand op = parse_operand(true);
        if (op.index < 0) {
          for (int i = 0; i < qreg_size; ++i) qs.push_back(i);
        } else {
          qs.push_back(op.index);
        }
        if (!lx.try_consume(',')) break;
      }
      lx.expect(';');
      // Chain pairwise so the ≤2-operand gate invariant holds while keeping
      // the full cross-wire synchronization of a wide barrier.
      if (qs.size() == 1) {
        pending.push_back(Gate::barrier1(qs[0]));
      } else {
        for (std::size_t i = 0; i + 1 < qs.size(); ++i)
          pending.push_back(Gate::barrier2(qs[i], qs[i + 1]));
      }
    } else if (id == "measure") {
      Operand q = parse_operand(true);
      lx.expect('-');
      lx.expect('>');
      Operand cb = parse_operand(false);
      lx.expect(';');
      if (q.index < 0) {
        for (int i = 0; i < qreg_size; ++i) pending.push_back(Gate::measure(i, i));
      } else {
        pending.push_back(Gate::measure(q.index, cb.index < 0 ? q.index : cb.index));
      }
    } else {
      // Gate application.
      std::vector<double> params;
      if (lx.try_consume('(')) {
        if (!lx.try_consume(')')) {
          for (;;) {
            ExprParser ep{lx};
            params.push_back(ep.parse());
            if (!lx.try_consume(',')) break;
          }
          lx.expect(')');
        }
      }
      std::vector<Operand> ops;
      for (;;) {
        ops.push_back(parse_operand(true));
        if (!lx.try_consume(',')) break;
      }
      lx.expect(';');

      auto kind = std_gate(id);
      if (known_multiqubit(id) || ops.size() > 2)
        lx.fail("gate on more than two qubits is unsupported: " + id);

      auto emit = [&](const std::vector<int>& qs) {
        Gate g;
        if (kind) {
          g.kind = *kind;
          if (gate_arity(*kind) != static_cast<int>(qs.size()))
            lx.fail("wrong operand count for " + id);
        } else {
          g.kind = qs.size() == 1 ? GateKind::Opaque1q : GateKind::Opaque2q;
          g.label = id;
        }
        g.q = {qs[0], qs.size() == 2 ? qs[1] : -1};
        g.params = params;
        int pa = param_arity(g.kind);
        if (pa >= 0 && pa != static_cast<int>(params.size()))
          lx.fail("wrong parameter count for " + id);
        pending.push_back(std::move(g));
      };

      if (ops.size() == 1 && ops[0].index < 0) {
        for (int i = 0; i < qreg_size; ++i) emit({i});  // broadcast
      } else {
        std::vector<int> qs;
        for (const Operand& op : ops) {
          if (op.index < 0) lx.fail("register broadcast on multi-qubit gate");
          qs.push_back(op.index);
        }
        emit(qs);
      }
    }
  }

  if (qreg_size < 0) throw ParseError("no quantum register declared", lx.line, lx.col);
  QCircuit c(qreg_size, std::move(name));
  for (Gate& g : pending) c.add(std::move(g));
  return c;
}

QCircuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path;
  if (auto slash = base.find_last_of('/'); slash != std::string::npos)
    base = base.substr(slash + 1);
  if (auto dot = base.find_last_of('.'); dot != std::string::npos) base = base.substr(0, dot);
  return parse_qasm(ss.str(), base);
}

namespace {

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string emit_qasm(const QCircuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.num_qubits()) + "];\n";
  int max_cbit = -1;
  for (const Gate& g : c)
    if (g.kind == GateKind::Measure) max_cbit = std::max(max_cbit, g.cbit);
  if (max_cbit >= 0) out += "creg c[" + std::to_string(max_cbit + 1) + "];\n";

  for (const Gate& g : c) {
    if (g.kind == GateKind::Measure) {
      out += "measure q[" + std::to_string(g.q[0]) + "] -> c[" + std::to_string(g.cbit) +
             "];\n";
      continue;
    }
    std::string name;
    if (g.kind == GateKind::Opaque1q || g.kind == GateKind::Opaque2q) {
      if (g.label.empty())
        throw std::invalid_argument("cannot emit an unlabeled opaque gate");
      name = g.label;
    } else {
      name = gate_name(g.kind);
    }
    out += name;
    if (!g.params.empty()) {
      out += '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i) out += ',';
        out += fmt_param(g.params[i]);
      }
      out += ')';
    }
    out += " q[" + std::to_string(g.q[0]) + "]";
    if (g.arity() == 2) out += ",q[" + std::to_string(g.q[1]) + "]";
    out += ";\n";
  }
  return out;
}

void write_qasm_file(const QCircuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << emit_qasm(c);
}

}  // namespace qnc
