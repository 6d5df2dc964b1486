#include "gswb/circuit.hpp"

#include <array>
#include <cmath>

namespace gswb {

Gate make_gate(std::vector<int> support, Mat block) {
  Gate g;
  g.support = std::move(support);
  g.block = std::move(block);
  return g;
}

Mat pauli_x() {
  Mat x = Mat::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

Mat identity_gate(int qubits) {
  int d = 1 << qubits;
  return Mat::Identity(d, d);
}

Mat hadamard() {
  Mat h(2, 2);
  double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Mat controlled(const Mat& u) {
  int d = u.rows();
  Mat c = Mat::Identity(2 * d, 2 * d);
  c.block(d, d, d, d) = u;
  return c;
}

Mat cnot() { return controlled(pauli_x()); }

CircuitDiagnostics validate_circuit(const QuantumCircuit& c) {
  CircuitDiagnostics d;
  auto bad = [&](const std::string& s) { d.violations.push_back(s); };
  if (c.width <= 0) bad("width must be positive");
  const Span& b = c.layout.proof;
  const Span& a = c.layout.ancilla;
  if (b.lo != 0 || b.hi != a.lo || a.hi != c.width)
    bad("registers must partition [0, width): proof then ancilla");
  if (!a.contains(c.layout.output)) bad("output qubit must lie in the ancilla register");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::string where = "gate " + std::to_string(i) + ": ";
    if (g.support.empty() || g.support.size() > 3) {
      bad(where + "support must have 1-3 qubits");
      continue;
    }
    bool range_ok = true;
    for (std::size_t j = 0; j < g.support.size(); ++j) {
      if (g.support[j] < 0 || g.support[j] >= c.width) {
        bad(where + "support out of range");
        range_ok = false;
      }
      for (std::size_t k = j + 1; k < g.support.size(); ++k)
        if (g.support[j] == g.support[k]) bad(where + "repeated support qubit");
    }
    int d2 = 1 << g.support.size();
    if (g.block.rows() != d2 || g.block.cols() != d2)
      bad(where + "block dimension must be 2^|support|");
    else if (!is_unitary(g.block))
      bad(where + "non-unitary block");
    (void)range_ok;
  }
  return d;
}

void apply_gate(Vec& state, int width, const Gate& g) {
  int k = int(g.support.size());
  int d = 1 << k;
  if (g.block.rows() != d)
    throw Error(ErrorCode::dimension_mismatch, "gate block/support mismatch");
  std::uint64_t smask = 0;
  std::vector<std::uint64_t> pat(d, 0);
  for (int i = 0; i < k; ++i) {
    std::uint64_t m = std::uint64_t(1) << (width - 1 - g.support[i]);
    smask |= m;
    for (int s = 0; s < d; ++s)
      if ((s >> (k - 1 - i)) & 1) pat[s] |= m;
  }
  std::uint64_t dim = std::uint64_t(1) << width;
  std::array<cplx, 8> amp{};
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & smask) continue;
    for (int s = 0; s < d; ++s) amp[s] = state[base | pat[s]];
    for (int r = 0; r < d; ++r) {
      cplx v = 0;
      for (int s = 0; s < d; ++s) v += g.block(r, s) * amp[s];
      state[base | pat[r]] = v;
    }
  }
}

Vec simulate_statevector(const QuantumCircuit& c, const std::vector<int>& proof,
                         int width_limit) {
  if (c.width > width_limit)
    throw Error(ErrorCode::resource_limit,
                "circuit width " + std::to_string(c.width) +
                    " exceeds statevector limit " + std::to_string(width_limit));
  if (int(proof.size()) != c.proof_size())
    throw Error(ErrorCode::invalid_argument, "proof length must equal |B|");
  std::uint64_t dim = std::uint64_t(1) << c.width;
  Vec state = Vec::Zero(dim);
  std::vector<int> bits(c.width, 0);
  for (int i = 0; i < c.proof_size(); ++i) bits[c.layout.proof.lo + i] = proof[i];
  state[basis_index(bits)] = 1.0;
  for (const Gate& g : c.gates) apply_gate(state, c.width, g);
  return state;
}

double acceptance_probability(const QuantumCircuit& c,
                              const std::vector<int>& proof, int width_limit) {
  Vec state = simulate_statevector(c, proof, width_limit);
  return basis_weight(state, c.width, {c.layout.output}, {1});
}

double basis_weight(const Vec& state, int width, const std::vector<int>& qubits,
                    const std::vector<int>& pattern) {
  if (qubits.size() != pattern.size())
    throw Error(ErrorCode::invalid_argument, "pattern length must match qubit count");
  std::uint64_t mask = 0, target = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    std::uint64_t m = std::uint64_t(1) << (width - 1 - qubits[i]);
    mask |= m;
    if (pattern[i]) target |= m;
  }
  double w = 0;
  std::uint64_t dim = std::uint64_t(1) << width;
  if (dim != std::uint64_t(state.size()))
    throw Error(ErrorCode::dimension_mismatch, "state size is not 2^width");
  for (std::uint64_t i = 0; i < dim; ++i)
    if ((i & mask) == target) w += std::norm(state[i]);
  return w;
}

QuantumCircuit amplify_circuit(const QuantumCircuit& c, int repetitions) {
  if (repetitions < 1)
    throw Error(ErrorCode::invalid_argument, "repetitions must be >= 1");
  if (repetitions == 1) return c;
  int n = c.proof_size();
  int q = c.ancilla_size();
  QuantumCircuit out;
  out.width = n + repetitions * q + (repetitions - 1);
  out.layout.proof = {0, n};
  out.layout.ancilla = {n, out.width};
  int acc0 = n + repetitions * q;  // AND-accumulator qubits
  auto remap = [&](int qubit, int copy) {
    if (qubit < n) return qubit;
    return n + copy * q + (qubit - n);
  };
  std::vector<int> outputs(repetitions);
  for (int r = 0; r < repetitions; ++r) {
    for (const Gate& g : c.gates) {
      Gate h = g;
      for (int& s : h.support) s = remap(s, r);
      out.gates.push_back(h);
    }
    outputs[r] = remap(c.layout.output, r);
  }
  Mat toffoli = controlled(cnot());
  int prev = outputs[0];
  for (int r = 1; r < repetitions; ++r) {
    int acc = acc0 + (r - 1);
    out.gates.push_back(make_gate({prev, outputs[r], acc}, toffoli));
    prev = acc;
  }
  out.layout.output = prev;
  return out;
}

double measured_error(const QuantumCircuit& c, int proof_limit, int width_limit) {
  int n = c.proof_size();
  if (n > proof_limit)
    throw Error(ErrorCode::resource_limit,
                "proof register too large to enumerate (" + std::to_string(n) + ")");
  double eps = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
    double p = acceptance_probability(c, index_bits(x, n), width_limit);
    eps = std::max(eps, std::min(p, 1.0 - p));
  }
  return eps;
}

}  // namespace gswb
