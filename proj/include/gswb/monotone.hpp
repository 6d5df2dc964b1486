#pragma once

#include "gswb/core.hpp"

namespace gswb {

enum class GateKind { NOT, AND, OR };

struct MonotoneGate {
  GateKind kind;
  std::vector<int> in;  // wire indices
  int out;              // wire index
};

struct MonotoneCircuit {
  int n_inputs = 0;
  std::vector<MonotoneGate> gates;
  int output = 0;  // wire index, normally the last gate's output
};

struct MmsaInstance {
  MonotoneCircuit circuit;
  int g = 0;
  int g_prime = 0;
};

struct MonotoneDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Wires are numbered 0..n_inputs-1 for inputs, then one per gate in order.
MonotoneDiagnostics validate_monotone(const MonotoneCircuit& c,
                                      bool reject_not = false);

int eval_monotone(const MonotoneCircuit& c, const std::vector<int>& input);

// Values of every wire (inputs then gate outputs) under the given input.
std::vector<int> eval_monotone_wires(const MonotoneCircuit& c,
                                     const std::vector<int>& input);

}  // namespace gswb
