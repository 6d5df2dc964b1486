#include "gswb/gscon.hpp"

#include <cmath>
#include <numbers>

#include "gswb/synthesis.hpp"

namespace gswb {

namespace {

const std::vector<int> kPhases[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};

Mat proj_sum(const std::vector<std::vector<int>>& patterns) {
  int d = 1 << patterns.front().size();
  Mat p = Mat::Zero(d, d);
  for (const auto& pat : patterns) p += basis_projector(pat);
  return p;
}

Mat outside(const std::vector<std::vector<int>>& allowed) {
  int d = 1 << allowed.front().size();
  return Mat::Identity(d, d) - proj_sum(allowed);
}

}  // namespace

std::vector<int> timestep_pattern(long long idx) { return kPhases[idx % 4]; }

int timestep_flip_bit(long long idx) { return idx % 2 == 0 ? 0 : 1; }

std::vector<LocalTerm> GsconInstance::gated_terms() const {
  std::vector<LocalTerm> out;
  for (const LocalTerm& t : terms)
    if (t.tag != TermTag::amp && t.tag != TermTag::gated) out.push_back(t);
  return out;
}

std::vector<LocalTerm> GsconInstance::structure_terms() const {
  std::vector<LocalTerm> out;
  for (const LocalTerm& t : terms)
    if (t.tag == TermTag::amp || t.tag == TermTag::gated) out.push_back(t);
  return out;
}

GsconInstance compile_gscon(const QmsaInstance& qmsa, int width_limit) {
  QuantumCircuit v = qmsa.repetitions > 1
                         ? amplify_circuit(qmsa.circuit, qmsa.repetitions)
                         : qmsa.circuit;
  v = decompose_to_2local(v);
  CircuitDiagnostics cd = validate_circuit(v);
  if (!cd.ok())
    throw Error(ErrorCode::invalid_argument,
                "invalid verifier: " + cd.violations.front());
  if (v.layout.proof.lo != 0 || v.layout.proof.hi != v.layout.ancilla.lo ||
      v.layout.ancilla.hi != v.width)
    throw Error(ErrorCode::invalid_argument,
                "verifier must lay out proof then ancilla contiguously");
  int n = v.proof_size();
  if (n < 1) throw Error(ErrorCode::degenerate_instance, "empty proof register");
  if (qmsa.g < 0 || qmsa.g > n || qmsa.g_prime < 1 || qmsa.g_prime > n)
    throw Error(ErrorCode::invalid_argument, "weight thresholds out of range");

  GsconInstance inst;
  inst.g = qmsa.g;
  inst.g_prime = qmsa.g_prime;
  inst.verifier = v;
  inst.epsilon = measured_error(v, 16, width_limit);

  KitaevHamiltonian kit = compile_kitaev(v);
  int T = kit.T;
  EnergyBounds eb = kitaev_energy_bounds(T, inst.epsilon);
  inst.alpha = eb.alpha;
  inst.beta = eb.beta;
  inst.mu = 32.0 * std::pow(std::numbers::pi, 4) / (eb.beta * eb.beta);

  HistoryPrep hp = history_prep_circuit(v);
  inst.w = hp.circuit;
  long long nw = (long long)inst.w.gates.size();
  if (nw < 1) throw Error(ErrorCode::degenerate_instance, "empty prep circuit");

  int q = v.ancilla_size();
  GsconRegisters& r = inst.reg;
  int at = 0;
  auto take = [&at](int k) { Span s{at, at + k}; at += k; return s; };
  r.B = take(n);
  r.C = take(q);
  r.D = take(T);
  r.E = take(3);
  r.F = take(n);
  r.G = take(n);
  r.K = take(4 * n);
  r.L = take(2);
  r.M = take(int(nw));
  inst.width = at;
  if (inst.width > width_limit)
    throw Error(ErrorCode::resource_limit,
                "instance needs " + std::to_string(inst.width) +
                    " qubits, over limit " + std::to_string(width_limit));

  auto K = [&r](long long i) { return r.K.lo + int(i) - 1; };  // 1-based
  auto M = [&r](long long i) { return r.M.lo + int(i) - 1; };
  int l1 = r.L.lo, l2 = r.L.lo + 1;
  Mat pe = outside({{0, 0, 0}, {1, 1, 1}});  // E strictly mid-flip
  std::vector<int> equbits = {r.E.lo, r.E.lo + 1, r.E.lo + 2};

  // Verifier clock terms act only while the GO flag is mid-flip.
  for (const LocalTerm& t : kit.frustration_free_part()) {
    LocalTerm g = t;
    g.support.insert(g.support.end(), equbits.begin(), equbits.end());
    g.block = kron(t.block, pe);
    g.coeff = inst.mu;
    inst.terms.push_back(std::move(g));
  }
  for (const LocalTerm& t : kit.out) {
    LocalTerm g = t;
    g.support.insert(g.support.end(), equbits.begin(), equbits.end());
    g.block = kron(t.block, pe);
    inst.terms.push_back(std::move(g));
  }
  // GO moves are only allowed once the counter is full.
  {
    LocalTerm t;
    t.support = equbits;
    t.support.push_back(K(4 * n));
    t.block = kron(pe, basis_projector({0}));
    t.tag = TermTag::gated;
    inst.terms.push_back(std::move(t));
  }

  auto amp = [&inst](std::vector<int> support, Mat block) {
    LocalTerm t;
    t.support = std::move(support);
    t.block = std::move(block);
    t.tag = TermTag::amp;
    inst.terms.push_back(std::move(t));
  };

  // (a) counter stays unary
  for (int i = 1; i < 4 * n; ++i)
    amp({K(i), K(i + 1)}, basis_projector({0, 1}));
  // (b) phase register tracks the counter value
  amp({K(1), l1, l2}, kron(basis_projector({0}), outside({{0, 0}})));
  for (long long j = 1; j < 4 * n; ++j)
    amp({K(j), K(j + 1), l1, l2},
        kron(basis_projector({1, 0}), outside({timestep_pattern(j)})));
  amp({K(4 * n), l1, l2}, kron(basis_projector({1}), outside({{0, 0}})));
  // (c) gate counter moves in pairs only during phases 10 and 01
  for (const std::vector<int>& lp : {std::vector<int>{1, 0}, {0, 1}})
    for (long long i = 1; i < nw; ++i)
      amp({l1, l2, M(i), M(i + 1)},
          kron(basis_projector(lp), proj_sum({{0, 1}, {1, 0}})));
  // (d) gate counter is back down by phase 01 of each slot
  for (int i = 1; i <= n; ++i)
    amp({K(4 * i - 1), K(4 * i), M(1)},
        kron(basis_projector({1, 0}), basis_projector({1})));
  // (e) proof bit and its shadows agree except at the slot's own phase 00
  {
    Mat disagree = outside({{0, 0, 0}, {1, 1, 1}});
    amp({r.B.lo, r.F.lo, r.G.lo, K(1), K(2)},
        kron(disagree, outside({{0, 0}})));
    for (int i = 1; i < n; ++i)
      amp({r.B.lo + i, r.F.lo + i, r.G.lo + i, K(4 * i), K(4 * i + 1)},
          kron(disagree, outside({{1, 0}})));
  }
  // (f) gate counter raised exactly for slots whose proof bit is set
  for (int i = 0; i < n; ++i) {
    amp({K(4 * i + 1), K(4 * i + 2), r.B.lo + i, M(1)},
        kron(basis_projector({1, 0}),
             kron(basis_projector({1}), basis_projector({0}))));
    amp({K(4 * i + 1), K(4 * i + 2), r.B.lo + i, M(1)},
        kron(basis_projector({1, 0}),
             kron(basis_projector({0}), basis_projector({1}))));
  }

  inst.m = 2 * (2LL * qmsa.g + (long long)qmsa.g * nw + 8LL * n + nw + 1);
  inst.m_prime = (long long)qmsa.g_prime * nw / 2;
  if (inst.m_prime < 1)
    throw Error(ErrorCode::degenerate_instance, "trivial move lower bound");
  inst.eta1 = inst.alpha;
  inst.eta2 = std::min(1.0 / std::pow(double(inst.m_prime), 13.0),
                       inst.beta / (6.0 * 64.0 * double(inst.m_prime) *
                                    double(inst.m_prime)));
  inst.eta3 = 0.0;
  inst.eta4 = 0.25;

  inst.start.assign(inst.width, 0);
  inst.target.assign(inst.width, 0);
  for (int e : equbits) inst.target[e] = 1;
  if (std::abs(diagonal_energy(inst.terms, inst.start)) > 1e-12 ||
      std::abs(diagonal_energy(inst.terms, inst.target)) > 1e-12)
    throw Error(ErrorCode::degenerate_instance,
                "endpoints are not zero-energy");
  return inst;
}

namespace {

Gate xg(int q) { return make_gate({q}, pauli_x()); }
Gate xxg(int a, int b) { return make_gate({a, b}, kron(pauli_x(), pauli_x())); }

void counter_gates(const GsconInstance& inst, int hw_set,
                   std::vector<Gate>& out) {
  // X / XX flips raising the M register; pairs keep adjacent bits equal.
  const Span& m = inst.reg.M;
  (void)hw_set;
  for (int i = 0; i < m.size(); i += 2) {
    if (i + 1 < m.size())
      out.push_back(xxg(m.lo + i, m.lo + i + 1));
    else
      out.push_back(xg(m.lo + i));
  }
}

}  // namespace

std::vector<Gate> honest_gscon_path(const GsconInstance& inst,
                                    const std::vector<int>& proof) {
  int n = inst.reg.B.size();
  if (int(proof.size()) != n)
    throw Error(ErrorCode::invalid_argument, "proof length != proof register");
  const GsconRegisters& r = inst.reg;
  int l1 = r.L.lo, l2 = r.L.lo + 1;
  auto K = [&r](long long i) { return r.K.lo + int(i) - 1; };
  std::vector<Gate> fwd;
  auto advance = [&](long long idx) {  // counter idx -> idx+1
    int lbit = timestep_flip_bit(idx) == 0 ? l1 : l2;
    fwd.push_back(xxg(K(idx + 1), lbit));
  };
  for (int s = 1; s <= n; ++s) {
    long long idx = 4LL * (s - 1);
    bool set = proof[s - 1] != 0;
    if (set) {
      fwd.push_back(xxg(r.B.lo + s - 1, r.F.lo + s - 1));
      fwd.push_back(xg(r.G.lo + s - 1));
      counter_gates(inst, s, fwd);  // raise M
    }
    advance(idx);
    advance(idx + 1);
    if (set) counter_gates(inst, s, fwd);  // lower M at phase 11
    advance(idx + 2);
    advance(idx + 3);
  }
  // Build the verifier's history state, flip the GO flag, uncompute.
  std::vector<Gate> path = fwd;
  for (const Gate& g : inst.w.gates) path.push_back(g);
  path.push_back(xxg(r.E.lo, r.E.lo + 1));
  path.push_back(xg(r.E.lo + 2));
  for (auto it = inst.w.gates.rbegin(); it != inst.w.gates.rend(); ++it)
    path.push_back(make_gate(it->support, Mat(it->block.adjoint())));
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) path.push_back(*it);
  return path;
}

PathVerdict verify_gscon_path(const GsconInstance& inst,
                              const std::vector<Gate>& path,
                              double energy_slack, double final_tol,
                              int width_limit) {
  PathVerdict v;
  if (inst.width > width_limit)
    throw Error(ErrorCode::resource_limit, "instance exceeds width limit");
  std::uint64_t dim = std::uint64_t(1) << inst.width;
  Vec state = Vec::Zero(dim);
  state[basis_index(inst.start)] = 1.0;
  v.length = (long long)path.size();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Gate& g = path[i];
    if (g.support.size() > 2)
      v.violations.push_back("move " + std::to_string(i) + " acts on " +
                             std::to_string(g.support.size()) + " qubits");
    if (!is_unitary(g.block))
      v.violations.push_back("move " + std::to_string(i) + " is not unitary");
    if (!v.violations.empty()) return v;
    apply_gate(state, inst.width, g);
    double e = expectation(inst.terms, state, inst.width);
    v.energies.push_back(e);
    v.max_energy = std::max(v.max_energy, e);
  }
  if (v.max_energy > inst.eta1 + energy_slack)
    v.violations.push_back("intermediate energy exceeds eta1");
  if (v.length > inst.m) v.violations.push_back("path longer than m");
  // l2 distance to the target up to a global phase, computed from the
  // residual vector (the inner-product form cancels catastrophically near 0)
  cplx amp = state[basis_index(inst.target)];
  cplx phase = std::abs(amp) > 0 ? amp / std::abs(amp) : cplx(1, 0);
  Vec residual = state;
  residual[basis_index(inst.target)] -= phase;
  v.final_distance = residual.norm();
  if (v.final_distance > std::max(inst.eta3, final_tol))
    v.violations.push_back("end state is far from the target");
  v.ok = v.violations.empty();
  return v;
}

}  // namespace gswb
