#include "gswb/kitaev.hpp"

#include <cmath>
#include <numbers>

#include "gswb/synthesis.hpp"

namespace gswb {

std::vector<LocalTerm> KitaevHamiltonian::all() const {
  std::vector<LocalTerm> t;
  t.reserve(in.size() + prop.size() + out.size() + stab.size());
  t.insert(t.end(), in.begin(), in.end());
  t.insert(t.end(), prop.begin(), prop.end());
  t.insert(t.end(), out.begin(), out.end());
  t.insert(t.end(), stab.begin(), stab.end());
  return t;
}

std::vector<LocalTerm> KitaevHamiltonian::frustration_free_part() const {
  std::vector<LocalTerm> t;
  t.reserve(in.size() + prop.size() + stab.size());
  t.insert(t.end(), in.begin(), in.end());
  t.insert(t.end(), prop.begin(), prop.end());
  t.insert(t.end(), stab.begin(), stab.end());
  return t;
}

EnergyBounds kitaev_energy_bounds(int T, double epsilon) {
  if (T < 1) throw Error(ErrorCode::invalid_argument, "T must be >= 1");
  if (epsilon < 0 || epsilon > 1)
    throw Error(ErrorCode::invalid_argument, "epsilon must lie in [0, 1]");
  EnergyBounds b;
  b.T = T;
  b.epsilon = epsilon;
  double tp1 = double(T) + 1.0;
  b.alpha = epsilon / tp1;
  b.beta = std::numbers::pi * std::numbers::pi * (1.0 - std::sqrt(epsilon)) /
           (2.0 * tp1 * tp1 * tp1);
  b.beta_above_alpha = b.beta > b.alpha;
  return b;
}

double clock_gap_bound(int T) {
  if (T < 1) throw Error(ErrorCode::invalid_argument, "T must be >= 1");
  double t = double(T);
  return std::numbers::pi * std::numbers::pi / (64.0 * t * t * t);
}

namespace {

// Prop term for gate V at step t (1-based), support = gate qubits followed by
// the listed clock qubits. All four shapes are PSD with norm <= 1.
LocalTerm prop_term(const Gate& g, int t, int T, int clock_lo) {
  int gd = 1 << g.support.size();
  Mat ig = Mat::Identity(gd, gd);
  Mat clock_diag, clock_hop;  // H = kron(ig, diag) - kron(V, hop) - h.c. part
  std::vector<int> clock_qubits;
  auto proj = [](std::initializer_list<int> bits) {
    return basis_projector(std::vector<int>(bits));
  };
  auto hop = [](std::initializer_list<int> to, std::initializer_list<int> from) {
    std::vector<int> tv(to), fv(from);
    int d = 1 << tv.size();
    Mat m = Mat::Zero(d, d);
    m(basis_index(tv), basis_index(fv)) = 1.0;
    return m;
  };
  if (T == 1) {
    clock_qubits = {clock_lo};
    clock_diag = Mat::Identity(2, 2);
    clock_hop = hop({1}, {0});
  } else if (t == 1) {
    clock_qubits = {clock_lo, clock_lo + 1};
    clock_diag = proj({0, 0}) + proj({1, 0});
    clock_hop = hop({1, 0}, {0, 0});
  } else if (t < T) {
    clock_qubits = {clock_lo + t - 2, clock_lo + t - 1, clock_lo + t};
    clock_diag = proj({1, 0, 0}) + proj({1, 1, 0});
    clock_hop = hop({1, 1, 0}, {1, 0, 0});
  } else {
    clock_qubits = {clock_lo + T - 2, clock_lo + T - 1};
    clock_diag = proj({1, 0}) + proj({1, 1});
    clock_hop = hop({1, 1}, {1, 0});
  }
  Mat h = 0.5 * kron(ig, clock_diag) - 0.5 * kron(g.block, clock_hop) -
          0.5 * kron(Mat(g.block.adjoint()), Mat(clock_hop.adjoint()));
  LocalTerm term;
  term.support = g.support;
  term.support.insert(term.support.end(), clock_qubits.begin(),
                      clock_qubits.end());
  term.block = std::move(h);
  term.tag = TermTag::prop;
  return term;
}

}  // namespace

KitaevHamiltonian compile_kitaev(const QuantumCircuit& c) {
  CircuitDiagnostics d = validate_circuit(c);
  if (!d.ok())
    throw Error(ErrorCode::invalid_argument,
                "invalid circuit: " + d.violations.front());
  QuantumCircuit padded = c;
  KitaevHamiltonian h;
  if (padded.gates.empty()) {
    padded.gates.push_back(make_gate({padded.layout.output}, identity_gate()));
    h.padded = true;
  }
  int T = int(padded.gates.size());
  int w = padded.width;
  h.circuit_width = w;
  h.T = T;
  h.clock = {w, w + T};
  h.n_total = w + T;

  Mat p1 = basis_projector({1});
  Mat p0 = basis_projector({0});
  for (int a = padded.layout.ancilla.lo; a < padded.layout.ancilla.hi; ++a) {
    LocalTerm t;
    t.support = {a, h.clock.lo};
    t.block = kron(p1, p0);
    t.tag = TermTag::in;
    h.in.push_back(std::move(t));
  }
  for (int t = 1; t <= T; ++t)
    h.prop.push_back(prop_term(padded.gates[t - 1], t, T, h.clock.lo));
  {
    LocalTerm t;
    t.support = {padded.layout.output, h.clock.hi - 1};
    t.block = kron(p0, p1);
    t.tag = TermTag::out;
    h.out.push_back(std::move(t));
  }
  for (int q = h.clock.lo; q + 1 < h.clock.hi; ++q) {
    LocalTerm t;
    t.support = {q, q + 1};
    t.block = basis_projector({0, 1});
    t.tag = TermTag::stab;
    h.stab.push_back(std::move(t));
  }
  return h;
}

namespace {

Vec history_from_initial(const QuantumCircuit& c, Vec circuit_state,
                         int width_limit) {
  int T = std::max<int>(1, int(c.gates.size()));
  int w = c.width;
  if (w + T > width_limit)
    throw Error(ErrorCode::resource_limit,
                "history state needs " + std::to_string(w + T) +
                    " qubits, over limit " + std::to_string(width_limit));
  std::uint64_t cdim = std::uint64_t(1) << w;
  std::uint64_t dim = cdim << T;
  Vec out = Vec::Zero(dim);
  double norm = 1.0 / std::sqrt(double(T + 1));
  // Clock |t> = 1^t 0^(T-t) occupies the low T bits of the full index.
  auto clock_index = [T](int t) {
    return t == 0 ? std::uint64_t(0)
                  : ((std::uint64_t(1) << t) - 1) << (T - t);
  };
  for (int t = 0; t <= T; ++t) {
    if (t > 0 && t <= int(c.gates.size()))
      apply_gate(circuit_state, w, c.gates[t - 1]);
    std::uint64_t ck = clock_index(t);
    for (std::uint64_t i = 0; i < cdim; ++i)
      out[(i << T) | ck] += norm * circuit_state[i];
  }
  return out;
}

}  // namespace

Vec history_state(const QuantumCircuit& c, const std::vector<int>& proof,
                  int width_limit) {
  if (int(proof.size()) != c.proof_size())
    throw Error(ErrorCode::invalid_argument, "proof length != proof register");
  std::uint64_t cdim = std::uint64_t(1) << c.width;
  Vec s = Vec::Zero(cdim);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < proof.size(); ++i)
    if (proof[i]) idx |= bit_mask(c.layout.proof.lo + int(i), c.width);
  s[idx] = 1.0;
  return history_from_initial(c, std::move(s), width_limit);
}

Vec history_state(const QuantumCircuit& c, const Vec& proof_amps,
                  int width_limit) {
  int n = c.proof_size();
  if (proof_amps.size() != (Eigen::Index(1) << n))
    throw Error(ErrorCode::invalid_argument, "proof vector size is not 2^n");
  if (std::abs(proof_amps.norm() - 1.0) > tol::norm)
    throw Error(ErrorCode::invalid_argument, "proof vector is not normalized");
  std::uint64_t cdim = std::uint64_t(1) << c.width;
  Vec s = Vec::Zero(cdim);
  for (std::uint64_t p = 0; p < (std::uint64_t(1) << n); ++p) {
    if (proof_amps[p] == cplx(0)) continue;
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i)
      if ((p >> (n - 1 - i)) & 1)
        idx |= bit_mask(c.layout.proof.lo + i, c.width);
    s[idx] = proof_amps[p];
  }
  return history_from_initial(c, std::move(s), width_limit);
}

HistoryPrep history_prep_circuit(const QuantumCircuit& c) {
  QuantumCircuit padded = c;
  if (padded.gates.empty())
    padded.gates.push_back(make_gate({padded.layout.output}, identity_gate()));
  int T = int(padded.gates.size());
  int w = padded.width;
  HistoryPrep hp;
  hp.circuit.width = w + T;
  hp.circuit.layout = padded.layout;
  hp.circuit.layout.ancilla.hi = hp.circuit.width;  // clock joins the ancillas
  auto& gates = hp.circuit.gates;

  // Clock superposition: after these rotations the clock register carries
  // sum_t |1^t 0^(T-t)> / sqrt(T+1).
  {
    double k = double(T) + 1.0;
    Mat r(2, 2);
    r << std::sqrt(1.0 / k), -std::sqrt((k - 1.0) / k),
        std::sqrt((k - 1.0) / k), std::sqrt(1.0 / k);
    gates.push_back(make_gate({w}, r));
  }
  for (int i = 2; i <= T; ++i) {
    double k = double(T - i + 2);
    Mat r(2, 2);
    r << std::sqrt(1.0 / k), -std::sqrt((k - 1.0) / k),
        std::sqrt((k - 1.0) / k), std::sqrt(1.0 / k);
    gates.push_back(make_gate({w + i - 2, w + i - 1}, controlled(r)));
  }
  // Each circuit gate controlled on its clock qubit; identity steps advance
  // the clock without touching the computation.
  for (int t = 1; t <= T; ++t) {
    const Gate& g = padded.gates[t - 1];
    Mat ident = Mat::Identity(g.block.rows(), g.block.cols());
    if ((g.block - ident).cwiseAbs().maxCoeff() <= 1e-14) continue;
    std::vector<Gate> seq = synthesize_controlled(w + t - 1, g);
    gates.insert(gates.end(), seq.begin(), seq.end());
  }
  hp.cost_ratio = double(gates.size()) / double(T + w);
  return hp;
}

double history_prep_cost_bound() {
  // Worst case per gate: 4x4 Givens factorization (6 two-level factors, each
  // up to 3 CX-conjugated primitives, each primitive a 5-gate doubly
  // controlled block plus polarity flips) plus phase and diagonal parts,
  // bounded by 141 emitted gates; one clock rotation per step adds 1.
  return 142.0;
}

}  // namespace gswb
