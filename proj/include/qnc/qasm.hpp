#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qnc/circuit.hpp"

namespace qnc {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("qasm:" + std::to_string(line_) + ":" + std::to_string(col_) +
                           ": " + msg),
        line(line_),
        col(col_) {}
};

/// OpenQASM 2.0 subset: one quantum register, standard qelib1 one/two-qubit
/// gates, barrier and measure. Unknown one/two-qubit gates become opaque
/// placeholders with their name preserved; gates on three or more qubits are
/// rejected.
QCircuit parse_qasm(std::string_view text, std::string name = "");
QCircuit parse_qasm_file(const std::string& path);

std::string emit_qasm(const QCircuit& c);
void write_qasm_file(const QCircuit& c, const std::string& path);

}  // namespace qnc
