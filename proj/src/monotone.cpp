#include "gswb/monotone.hpp"

namespace gswb {

MonotoneDiagnostics validate_monotone(const MonotoneCircuit& c, bool reject_not) {
  MonotoneDiagnostics d;
  auto bad = [&](const std::string& s) { d.violations.push_back(s); };
  if (c.n_inputs <= 0) bad("circuit must have at least one input");
  int next_wire = c.n_inputs;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const MonotoneGate& g = c.gates[i];
    std::string where = "gate " + std::to_string(i) + ": ";
    std::size_t arity = g.kind == GateKind::NOT ? 1 : 2;
    if (g.in.size() != arity) bad(where + "wrong input arity");
    for (int w : g.in)
      if (w < 0 || w >= next_wire) bad(where + "input wire not yet defined");
    if (g.out != next_wire) bad(where + "output wire must be the next index");
    if (reject_not && g.kind == GateKind::NOT) bad(where + "NOT gate not allowed");
    ++next_wire;
  }
  if (!c.gates.empty() && c.output != next_wire - 1)
    bad("output must be the last gate's wire");
  return d;
}

std::vector<int> eval_monotone_wires(const MonotoneCircuit& c,
                                     const std::vector<int>& input) {
  if (int(input.size()) != c.n_inputs)
    throw Error(ErrorCode::invalid_argument, "input length must equal n_inputs");
  std::vector<int> wires(input.begin(), input.end());
  wires.resize(c.n_inputs + c.gates.size());
  for (const MonotoneGate& g : c.gates) {
    int v = 0;
    switch (g.kind) {
      case GateKind::NOT: v = !wires[g.in[0]]; break;
      case GateKind::AND: v = wires[g.in[0]] && wires[g.in[1]]; break;
      case GateKind::OR: v = wires[g.in[0]] || wires[g.in[1]]; break;
    }
    wires[g.out] = v;
  }
  return wires;
}

int eval_monotone(const MonotoneCircuit& c, const std::vector<int>& input) {
  return eval_monotone_wires(c, input)[c.output];
}

}  // namespace gswb
