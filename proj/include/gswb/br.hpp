#pragma once

#include "gswb/monotone.hpp"

namespace gswb {

using Clause = std::vector<int>;  // DIMACS literals, nonzero, no terminator

// Variable roles in a reconfiguration formula; spans are 1-based DIMACS
// variable ranges [lo, hi). y holds wire values, e the 3-bit GO flag, f/g
// shadow the inputs, k the unary move counter, l its 2-bit phase, a the
// per-slot gate counter.
struct BrRegisters {
  Span y, e, f, g, k, l, a;
};

struct BrInstance {
  int n_vars = 0;
  std::vector<Clause> clauses;
  BrRegisters reg;
  std::vector<int> start, target;  // assignments, index 0 = variable 1
  long long h = 0;        // YES flip budget
  long long h_prime = 0;  // NO lower bound on satisfying walks
  int n_inputs = 0, n_gates = 0;
  int g = 0, g_prime = 0;
  bool printed_or = false;
  MonotoneCircuit circuit;
};

// Clauses forcing wire out = gate(in) whenever the gating literal (negated
// e1) is false. With printed_or the OR gadget's third clause uses the
// uncorrected positive output literal, which fails to force OR(0,0) = 0.
std::vector<Clause> gate_gadget(const MonotoneGate& gate, int e1_var,
                                const std::vector<int>& wire_var,
                                bool printed_or = false);

BrInstance compile_br(const MmsaInstance& mmsa, bool printed_or = false);

bool eval_clause(const Clause& c, const std::vector<int>& assignment);
bool eval_cnf(const std::vector<Clause>& clauses,
              const std::vector<int>& assignment);

// Single-variable flip walk (list of 1-based variables) from start to target
// through satisfying assignments, for an accepted input of weight <= g.
struct BrPath {
  std::vector<int> flips;
  long long audited_length = 0;  // exact formula the flip list must match
};
BrPath honest_br_path(const BrInstance& inst, const std::vector<int>& input);

struct BrVerdict {
  bool ok = false;
  long long length = 0;
  std::vector<std::string> violations;
};
BrVerdict validate_br_path(const BrInstance& inst,
                           const std::vector<int>& flips);

}  // namespace gswb
