#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gswb/br.hpp"

using namespace gswb;

namespace {

MonotoneCircuit or_circuit() {
  MonotoneCircuit c;
  c.n_inputs = 2;
  c.gates.push_back({GateKind::OR, {0, 1}, 2});
  c.output = 2;
  return c;
}

MonotoneCircuit and_or_circuit() {
  MonotoneCircuit c;
  c.n_inputs = 3;
  c.gates.push_back({GateKind::AND, {0, 1}, 3});
  c.gates.push_back({GateKind::OR, {3, 2}, 4});
  c.output = 4;
  return c;
}

// All assignments of the gadget variables with e1 = 1 that satisfy the
// clauses, compared against the functional truth table.
bool gadget_exact(GateKind kind, bool printed) {
  int fan = kind == GateKind::NOT ? 1 : 2;
  std::vector<int> wires = {1, 2, 3};  // vars: inputs then output; e1 = 4
  MonotoneGate gate{kind, fan == 1 ? std::vector<int>{0} : std::vector<int>{0, 1},
                    fan};
  std::vector<int> wire_var(fan + 1);
  for (int i = 0; i <= fan; ++i) wire_var[i] = i + 1;
  int e1 = fan + 2;
  std::vector<Clause> cls = gate_gadget(gate, e1, wire_var, printed);
  for (int mask = 0; mask < (1 << (fan + 1)); ++mask) {
    std::vector<int> a(fan + 2, 0);
    for (int i = 0; i <= fan; ++i) a[i] = (mask >> i) & 1;
    a[e1 - 1] = 1;
    int in0 = a[0], in1 = fan == 2 ? a[1] : 0, out = a[fan];
    int expect = kind == GateKind::NOT   ? 1 - in0
                 : kind == GateKind::AND ? (in0 & in1)
                                         : (in0 | in1);
    bool sat = eval_cnf(cls, a);
    if (sat != (out == expect)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gadgets are exact for all three gate kinds") {
  CHECK(gadget_exact(GateKind::NOT, false));
  CHECK(gadget_exact(GateKind::AND, false));
  CHECK(gadget_exact(GateKind::OR, false));
}

TEST_CASE("the uncorrected OR gadget admits a wrong evaluation") {
  CHECK_FALSE(gadget_exact(GateKind::OR, true));
  // specifically: inputs 0,0 with output 1 slips through
  MonotoneGate gate{GateKind::OR, {0, 1}, 2};
  std::vector<Clause> cls = gate_gadget(gate, 4, {1, 2, 3}, true);
  CHECK(eval_cnf(cls, {0, 0, 1, 1}));
  std::vector<Clause> fixed = gate_gadget(gate, 4, {1, 2, 3}, false);
  CHECK_FALSE(eval_cnf(fixed, {0, 0, 1, 1}));
}

TEST_CASE("gadget clauses are vacuous while the GO flag is down") {
  MonotoneGate gate{GateKind::AND, {0, 1}, 2};
  std::vector<Clause> cls = gate_gadget(gate, 4, {1, 2, 3}, false);
  for (int mask = 0; mask < 8; ++mask)
    CHECK(eval_cnf(cls, {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, 0}));
}

TEST_CASE("compiled formula shape and parameters") {
  BrInstance inst = compile_br({or_circuit(), 1, 2});
  int n = 2, m = 1, w = 3;
  CHECK(inst.n_vars == 2 * w + 6 * n + 5);
  CHECK(inst.h == 2 * (3 * 1 + 2 * 1 * w + 8 * n) + 4);
  CHECK(inst.h == 54);
  CHECK(inst.h_prime == 6);
  CHECK(inst.reg.y.size() == w);
  CHECK(inst.reg.k.size() == 4 * n);
  CHECK(inst.reg.a.size() == w);
  for (const Clause& c : inst.clauses) {
    CHECK(!c.empty());
    CHECK(c.size() <= 7);
  }
  CHECK(eval_cnf(inst.clauses, inst.start));
  CHECK(eval_cnf(inst.clauses, inst.target));
  (void)m;
}

TEST_CASE("with the GO flag forced up, satisfiability tracks acceptance") {
  // enumerate assignments of y with e1 = 1, k full and the gadget-relevant
  // clauses; circuit accepts iff some consistent y exists with output 1
  for (bool use_and_or : {false, true}) {
    MonotoneCircuit mc = use_and_or ? and_or_circuit() : or_circuit();
    BrInstance inst = compile_br({mc, 1, use_and_or ? 3 : 2});
    int w = mc.n_inputs + int(mc.gates.size());
    for (int input = 0; input < (1 << mc.n_inputs); ++input) {
      std::vector<int> in_bits(mc.n_inputs);
      for (int i = 0; i < mc.n_inputs; ++i) in_bits[i] = (input >> i) & 1;
      bool accepted = eval_monotone(mc, in_bits) == 1;
      // gadget + output clauses only (those gated on e1)
      std::vector<Clause> gated;
      for (const Clause& c : inst.clauses)
        for (int lit : c)
          if (lit == -inst.reg.e.lo) {
            gated.push_back(c);
            break;
          }
      bool sat = false;
      for (int gmask = 0; gmask < (1 << int(mc.gates.size())); ++gmask) {
        std::vector<int> a(inst.n_vars, 0);
        a[inst.reg.e.lo - 1] = 1;
        for (int v = inst.reg.k.lo; v < inst.reg.k.hi; ++v) a[v - 1] = 1;
        for (int i = 0; i < mc.n_inputs; ++i)
          a[inst.reg.y.lo + i - 1] = in_bits[i];
        for (int i = 0; i < int(mc.gates.size()); ++i)
          a[inst.reg.y.lo + mc.n_inputs + i - 1] = (gmask >> i) & 1;
        if (eval_cnf(gated, a)) sat = true;
      }
      CHECK(sat == accepted);
    }
    (void)w;
  }
}

TEST_CASE("honest walk stays satisfying and hits the audited length") {
  BrInstance inst = compile_br({or_circuit(), 1, 2});
  BrPath p = honest_br_path(inst, {1, 0});
  BrVerdict v = validate_br_path(inst, p.flips);
  INFO((v.violations.empty() ? std::string() : v.violations.front()));
  CHECK(v.ok);
  // audited length exceeds the printed budget exactly by the gate-wire flips
  int gate_ones = 1;  // OR(1,0) = 1
  CHECK(p.audited_length == inst.h + 2 * gate_ones);
}

TEST_CASE("honest walk on the larger circuit") {
  BrInstance inst = compile_br({and_or_circuit(), 1, 3});
  BrPath p = honest_br_path(inst, {0, 0, 1});
  CHECK(validate_br_path(inst, p.flips).ok);
  CHECK_THROWS_AS((void)honest_br_path(inst, {0, 0, 0}), Error);
}

TEST_CASE("broken walks are diagnosed") {
  BrInstance inst = compile_br({or_circuit(), 1, 2});
  BrPath p = honest_br_path(inst, {1, 0});
  std::vector<int> cut(p.flips.begin(), p.flips.end() - 1);
  BrVerdict v = validate_br_path(inst, cut);
  CHECK_FALSE(v.ok);
  std::vector<int> jump = {inst.reg.e.lo + 1};  // flip e2 alone
  CHECK_FALSE(validate_br_path(inst, jump).ok);
}
