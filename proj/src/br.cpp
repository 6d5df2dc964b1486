#include "gswb/br.hpp"

#include <algorithm>
#include <set>

#include "gswb/gscon.hpp"

namespace gswb {

namespace {

using Conj = std::vector<int>;  // conjunction of literals

// CNF of a DNF (one clause per choice of a literal from each conjunction),
// dropping tautologies and duplicate literals/clauses.
void distribute(const std::vector<Conj>& conjs, std::vector<Clause>& out) {
  std::size_t total = 1;
  for (const Conj& c : conjs) {
    total *= c.size();
    if (total > 100000)
      throw Error(ErrorCode::resource_limit, "clause expansion too large");
  }
  std::set<Clause> seen;
  std::vector<std::size_t> pick(conjs.size(), 0);
  for (std::size_t it = 0; it < total; ++it) {
    Clause cl;
    for (std::size_t i = 0; i < conjs.size(); ++i)
      cl.push_back(conjs[i][pick[i]]);
    std::sort(cl.begin(), cl.end(), [](int a, int b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    bool taut = false;
    for (std::size_t i = 0; i + 1 < cl.size(); ++i)
      if (cl[i] == -cl[i + 1]) taut = true;
    if (!taut && seen.insert(cl).second) out.push_back(cl);
    for (std::size_t i = conjs.size(); i-- > 0;) {
      if (++pick[i] < conjs[i].size()) break;
      pick[i] = 0;
    }
  }
}

Conj phase_conj(int l1, int l2, const std::vector<int>& pattern) {
  return {pattern[0] ? l1 : -l1, pattern[1] ? l2 : -l2};
}

}  // namespace

std::vector<Clause> gate_gadget(const MonotoneGate& gate, int e1_var,
                                const std::vector<int>& wire_var,
                                bool printed_or) {
  int o = wire_var.at(gate.out);
  std::vector<Clause> cls;
  int ne = -e1_var;
  switch (gate.kind) {
    case GateKind::NOT: {
      int i = wire_var.at(gate.in.at(0));
      cls.push_back({ne, i, o});
      cls.push_back({ne, -i, -o});
      break;
    }
    case GateKind::AND: {
      int i = wire_var.at(gate.in.at(0)), j = wire_var.at(gate.in.at(1));
      cls.push_back({ne, -o, i});
      cls.push_back({ne, -o, j});
      cls.push_back({ne, -i, -j, o});
      break;
    }
    case GateKind::OR: {
      int i = wire_var.at(gate.in.at(0)), j = wire_var.at(gate.in.at(1));
      cls.push_back({ne, o, -i});
      cls.push_back({ne, o, -j});
      cls.push_back({ne, i, j, printed_or ? o : -o});
      break;
    }
  }
  return cls;
}

BrInstance compile_br(const MmsaInstance& mmsa, bool printed_or) {
  MonotoneDiagnostics md = validate_monotone(mmsa.circuit);
  if (!md.ok())
    throw Error(ErrorCode::invalid_argument,
                "invalid circuit: " + md.violations.front());
  int n = mmsa.circuit.n_inputs;
  int m = int(mmsa.circuit.gates.size());
  int w = n + m;
  if (n < 1 || m < 1)
    throw Error(ErrorCode::degenerate_instance, "circuit too small");
  if (mmsa.g < 0 || mmsa.g > n || mmsa.g_prime < 1 || mmsa.g_prime > n)
    throw Error(ErrorCode::invalid_argument, "weight thresholds out of range");

  BrInstance inst;
  inst.circuit = mmsa.circuit;
  inst.n_inputs = n;
  inst.n_gates = m;
  inst.g = mmsa.g;
  inst.g_prime = mmsa.g_prime;
  inst.printed_or = printed_or;

  BrRegisters& r = inst.reg;
  int at = 1;
  auto take = [&at](int k) { Span s{at, at + k}; at += k; return s; };
  r.y = take(w);
  r.e = take(3);
  r.f = take(n);
  r.g = take(n);
  r.k = take(4 * n);
  r.l = take(2);
  r.a = take(w);
  inst.n_vars = at - 1;

  std::vector<int> yv(w);
  for (int i = 0; i < w; ++i) yv[i] = r.y.lo + i;
  int e1 = r.e.lo, e2 = r.e.lo + 1, e3 = r.e.lo + 2;
  int l1 = r.l.lo, l2 = r.l.lo + 1;
  auto kv = [&r](long long j) { return r.k.lo + int(j) - 1; };
  auto av = [&r](int j) { return r.a.lo + j - 1; };

  auto& cls = inst.clauses;
  // Circuit gadgets and output, enforced while the GO flag is raised.
  for (const MonotoneGate& gate : mmsa.circuit.gates) {
    std::vector<Clause> gg = gate_gadget(gate, e1, yv, printed_or);
    cls.insert(cls.end(), gg.begin(), gg.end());
  }
  cls.push_back({-e1, yv.at(mmsa.circuit.output)});
  // GO flag: e2 = e3 unless e1 is raised, and raising needs a full counter.
  cls.push_back({e1, e2, -e3});
  cls.push_back({e1, -e2, e3});
  cls.push_back({-e1, kv(4 * n)});

  // (a) counter stays unary
  for (int i = 1; i < 4 * n; ++i) cls.push_back({kv(i), -kv(i + 1)});
  // (b) phase register tracks the counter, one flip behind at most
  distribute({{kv(1)}, phase_conj(l1, l2, {0, 0})}, cls);
  for (long long j = 1; j < 4 * n; ++j)
    distribute({{-kv(j)},
                {kv(j + 1)},
                phase_conj(l1, l2, timestep_pattern(j)),
                phase_conj(l1, l2, timestep_pattern(j - 1))},
               cls);
  distribute({{-kv(4 * n)},
              phase_conj(l1, l2, {0, 0}),
              phase_conj(l1, l2, {0, 1})},
             cls);
  // (c) gate counter is uniform during phases 10 and 01
  for (const std::vector<int>& lp : {std::vector<int>{1, 0}, {0, 1}}) {
    std::vector<Conj> lesc = {{lp[0] ? -l1 : l1}, {lp[1] ? -l2 : l2}};
    for (int i = 1; i < w; ++i) {
      std::vector<Conj> conjs = lesc;
      conjs.push_back({-av(i), -av(i + 1)});
      conjs.push_back({av(i), av(i + 1)});
      distribute(conjs, cls);
    }
  }
  // (d) gate counter back down by phase 01 of each slot
  for (int i = 1; i <= n; ++i)
    cls.push_back({-kv(4 * i - 1), kv(4 * i), -av(1)});
  // (e) input wire and its shadows agree except at the slot's phase 00
  for (int s = 1; s <= n; ++s) {
    int y = yv[s - 1], f = r.f.lo + s - 1, gg = r.g.lo + s - 1;
    std::vector<Conj> conjs = {{-y, -f, -gg}, {y, f, gg}};
    if (s == 1)
      conjs.push_back({-kv(1), -kv(2)});
    else
      conjs.push_back({kv(4 * (s - 1)), -kv(4 * (s - 1) + 1)});
    distribute(conjs, cls);
  }
  // (f) gate counter raised exactly for slots whose input is set
  for (int i = 0; i < n; ++i) {
    cls.push_back({-kv(4 * i + 1), kv(4 * i + 2), -yv[i], av(1)});
    cls.push_back({-kv(4 * i + 1), kv(4 * i + 2), yv[i], -av(1)});
  }

  inst.h = 2 * (3LL * mmsa.g + 2LL * mmsa.g * w + 8LL * n) + 4;
  inst.h_prime = (long long)mmsa.g_prime * w;
  inst.start.assign(inst.n_vars, 0);
  inst.target.assign(inst.n_vars, 0);
  inst.target[e2 - 1] = 1;
  inst.target[e3 - 1] = 1;
  if (!eval_cnf(cls, inst.start) || !eval_cnf(cls, inst.target))
    throw Error(ErrorCode::degenerate_instance, "endpoints do not satisfy");
  return inst;
}

bool eval_clause(const Clause& c, const std::vector<int>& assignment) {
  for (int lit : c) {
    int v = assignment.at(std::abs(lit) - 1);
    if ((lit > 0) == (v != 0)) return true;
  }
  return false;
}

bool eval_cnf(const std::vector<Clause>& clauses,
              const std::vector<int>& assignment) {
  for (const Clause& c : clauses)
    if (!eval_clause(c, assignment)) return false;
  return true;
}

BrPath honest_br_path(const BrInstance& inst, const std::vector<int>& input) {
  int n = inst.n_inputs, m = inst.n_gates, w = n + m;
  if (int(input.size()) != n)
    throw Error(ErrorCode::invalid_argument, "input length != circuit inputs");
  std::vector<int> wires = eval_monotone_wires(inst.circuit, input);
  if (!wires.at(inst.circuit.output))
    throw Error(ErrorCode::precondition, "circuit rejects the input");
  const BrRegisters& r = inst.reg;
  int l1 = r.l.lo, l2 = r.l.lo + 1;
  auto kv = [&r](long long j) { return r.k.lo + int(j) - 1; };
  auto av = [&r](int j) { return r.a.lo + j - 1; };

  std::vector<int> fwd;
  int hw = 0;
  for (int s = 1; s <= n; ++s) {
    long long idx = 4LL * (s - 1);
    bool set = input[s - 1] != 0;
    if (set) {
      ++hw;
      fwd.push_back(r.y.lo + s - 1);
      fwd.push_back(r.f.lo + s - 1);
      fwd.push_back(r.g.lo + s - 1);
      for (int j = 1; j <= w; ++j) fwd.push_back(av(j));
    }
    for (int step = 0; step < 4; ++step) {
      long long i = idx + step;
      fwd.push_back(kv(i + 1));
      fwd.push_back(timestep_flip_bit(i) == 0 ? l1 : l2);
      if (step == 1 && set)
        for (int j = 1; j <= w; ++j) fwd.push_back(av(j));
    }
  }
  BrPath path;
  path.flips = fwd;
  int gate_ones = 0;
  for (int i = n; i < w; ++i)
    if (wires[i]) {
      path.flips.push_back(r.y.lo + i);
      ++gate_ones;
    }
  int e1 = r.e.lo;
  path.flips.push_back(e1);
  path.flips.push_back(e1 + 1);
  path.flips.push_back(e1 + 2);
  path.flips.push_back(e1);
  for (int i = w - 1; i >= n; --i)
    if (wires[i]) path.flips.push_back(r.y.lo + i);
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) path.flips.push_back(*it);
  path.audited_length =
      2 * (3LL * hw + 2LL * hw * w + 8LL * n + gate_ones) + 4;
  if ((long long)path.flips.size() != path.audited_length)
    throw Error(ErrorCode::precondition, "flip count disagrees with audit");
  return path;
}

BrVerdict validate_br_path(const BrInstance& inst,
                           const std::vector<int>& flips) {
  BrVerdict v;
  v.length = (long long)flips.size();
  std::vector<int> a = inst.start;
  if (!eval_cnf(inst.clauses, a)) v.violations.push_back("start unsatisfied");
  for (std::size_t i = 0; i < flips.size() && v.violations.empty(); ++i) {
    int var = flips[i];
    if (var < 1 || var > inst.n_vars) {
      v.violations.push_back("flip " + std::to_string(i) + " out of range");
      break;
    }
    a[var - 1] ^= 1;
    if (!eval_cnf(inst.clauses, a))
      v.violations.push_back("step " + std::to_string(i) +
                             " leaves a clause unsatisfied");
  }
  if (v.violations.empty() && a != inst.target)
    v.violations.push_back("walk does not end at the target");
  v.ok = v.violations.empty();
  return v;
}

}  // namespace gswb
