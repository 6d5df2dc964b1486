#include "gswb/gse.hpp"

#include <cmath>
#include <numbers>

#include "gswb/kitaev.hpp"

namespace gswb {

Mat s1_gate() { return controlled(kron(pauli_x(), pauli_x())); }

Mat s2_gate() {
  Mat ch = kron(controlled(hadamard()), identity_gate());
  Mat cx23 = kron(identity_gate(), cnot());
  return cx23 * ch;
}

QuantumCircuit build_gse_circuit(const QuantumCircuit& verifier) {
  CircuitDiagnostics cd = validate_circuit(verifier);
  if (!cd.ok())
    throw Error(ErrorCode::invalid_argument,
                "invalid verifier: " + cd.violations.front());
  if (verifier.layout.proof.lo != 0 ||
      verifier.layout.proof.hi != verifier.layout.ancilla.lo ||
      verifier.layout.ancilla.hi != verifier.width)
    throw Error(ErrorCode::invalid_argument,
                "verifier must lay out proof then ancilla contiguously");
  int n = verifier.proof_size();
  int q = verifier.ancilla_size();
  int T = int(verifier.gates.size());
  QuantumCircuit w;
  w.width = n + q + 4 * n;
  w.layout.proof = {0, n};
  w.layout.ancilla = {n, w.width};
  w.layout.output = verifier.layout.output;
  int e = n + q, ep = e + n, f = ep + n, fp = f + n;
  for (int i = 0; i < n; ++i)
    w.gates.push_back(make_gate({i, e + i, ep + i}, s1_gate()));
  for (int i = 0; i < n; ++i)
    w.gates.push_back(make_gate({i, f + i, fp + i}, s2_gate()));
  for (const Gate& g : verifier.gates) w.gates.push_back(g);
  // Identity padding keeps the clock running so late history amplitudes
  // carry the final entangled configuration.
  for (int i = 0; i < 2 * n + T; ++i)
    w.gates.push_back(make_gate({w.layout.output}, identity_gate()));
  return w;
}

GseInstance compile_gse(const QmsaInstance& qmsa, int width_limit) {
  const QuantumCircuit& v = qmsa.circuit;
  GseInstance inst;
  inst.g = qmsa.g;
  inst.g_prime = qmsa.g_prime;
  inst.epsilon = measured_error(v, 16, width_limit);
  inst.w = build_gse_circuit(v);
  int n = v.proof_size();
  int q = v.ancilla_size();
  KitaevHamiltonian kit = compile_kitaev(inst.w);
  inst.T_prime = kit.T;
  inst.width = kit.n_total;
  if (inst.width > width_limit)
    throw Error(ErrorCode::resource_limit,
                "instance needs " + std::to_string(inst.width) +
                    " qubits, over limit " + std::to_string(width_limit));
  GseRegisters& r = inst.reg;
  r.B = {0, n};
  r.C = {n, n + q};
  r.E = {n + q, n + q + n};
  r.Ep = {r.E.hi, r.E.hi + n};
  r.F = {r.Ep.hi, r.Ep.hi + n};
  r.Fp = {r.F.hi, r.F.hi + n};
  r.D = kit.clock;
  for (int i = r.E.lo; i < r.E.hi; ++i) inst.partition_A.push_back(i);
  for (int i = r.F.lo; i < r.F.hi; ++i) inst.partition_A.push_back(i);

  EnergyBounds eb = kitaev_energy_bounds(inst.T_prime, inst.epsilon);
  inst.alpha = eb.alpha;
  inst.beta = eb.beta;
  inst.mu = 32.0 * std::pow(std::numbers::pi, 4) / (eb.beta * eb.beta);
  for (const LocalTerm& t : kit.frustration_free_part()) {
    LocalTerm s = t;
    s.coeff = inst.mu;
    inst.terms.push_back(std::move(s));
  }
  for (const LocalTerm& t : kit.out) inst.terms.push_back(t);

  double nq = double(inst.width);
  inst.eta1 = inst.alpha;
  inst.eta2 = inst.beta / (2.0 * nq * nq * nq);
  inst.eta3 = double(qmsa.g) + 1.0;
  inst.eta4 = (double(qmsa.g_prime) - 3.0) / 4.0;
  return inst;
}

std::vector<double> prefix_projection_norms(const GseInstance& inst,
                                            const std::vector<int>& p,
                                            const std::vector<int>& x) {
  int n = inst.reg.B.size();
  if (int(p.size()) != n || int(x.size()) != n)
    throw Error(ErrorCode::invalid_argument, "proof/pattern length mismatch");
  const QuantumCircuit& w = inst.w;
  std::uint64_t dim = std::uint64_t(1) << w.width;
  Vec state = Vec::Zero(dim);
  std::uint64_t idx = 0;
  for (int i = 0; i < n; ++i)
    if (p[i]) idx |= bit_mask(i, w.width);
  state[idx] = 1.0;
  std::vector<int> qubits, pattern;
  auto add = [&](const Span& s, const std::vector<int>& pat) {
    for (int i = 0; i < s.size(); ++i) {
      qubits.push_back(s.lo + i);
      pattern.push_back(pat[i]);
    }
  };
  add(inst.reg.E, p);
  add(inst.reg.Ep, p);
  add(inst.reg.F, x);
  add(inst.reg.Fp, x);
  std::vector<double> norms;
  norms.push_back(std::sqrt(basis_weight(state, w.width, qubits, pattern)));
  for (const Gate& g : w.gates) {
    apply_gate(state, w.width, g);
    norms.push_back(std::sqrt(basis_weight(state, w.width, qubits, pattern)));
  }
  return norms;
}

Vec gse_history_state(const GseInstance& inst, const std::vector<int>& proof,
                      int width_limit) {
  return history_state(inst.w, proof, width_limit);
}

}  // namespace gswb
