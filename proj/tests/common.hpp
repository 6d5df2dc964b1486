#pragma once

#include <random>

#include "gswb/circuit.hpp"
#include "gswb/hamiltonian.hpp"

namespace gswb::testutil {

// Haar-ish random unitary via QR of a Gaussian matrix.
inline Mat random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

// Verifier accepting exactly the proofs where the first proof bit is 1:
// CNOT from proof qubit 0 onto the ancilla output.
inline QuantumCircuit copy_verifier(int n_proof = 1) {
  QuantumCircuit c;
  c.width = n_proof + 1;
  c.layout.proof = {0, n_proof};
  c.layout.ancilla = {n_proof, n_proof + 1};
  c.layout.output = n_proof;
  c.gates.push_back(make_gate({0, n_proof}, cnot()));
  return c;
}

// Verifier computing OR of two proof bits into the ancilla output
// (X-conjugated Toffoli), then decomposable to 2-local.
inline QuantumCircuit or_verifier() {
  QuantumCircuit c;
  c.width = 3;
  c.layout.proof = {0, 2};
  c.layout.ancilla = {2, 3};
  c.layout.output = 2;
  Mat x = pauli_x();
  Mat toffoli = controlled(controlled(x));
  c.gates.push_back(make_gate({0}, x));
  c.gates.push_back(make_gate({1}, x));
  c.gates.push_back(make_gate({0, 1, 2}, toffoli));
  c.gates.push_back(make_gate({0}, x));
  c.gates.push_back(make_gate({1}, x));
  c.gates.push_back(make_gate({2}, x));
  return c;
}

// Dense matrix of a gate embedded into `width` qubits.
inline Mat embed_gate(const Gate& g, int width) {
  LocalTerm t;
  t.support = g.support;
  t.block = g.block;
  // dense_from_terms adds; start from the embedding of a non-Hermitian block
  // by brute force instead.
  std::uint64_t dim = std::uint64_t(1) << width;
  Mat m = Mat::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    Vec v = Vec::Zero(dim);
    v[col] = 1.0;
    apply_gate(v, width, g);
    m.col(col) = v;
  }
  return m;
}

inline Mat product_of(const std::vector<Gate>& gates, int width) {
  std::uint64_t dim = std::uint64_t(1) << width;
  Mat m = Mat::Identity(dim, dim);
  for (const Gate& g : gates) m = embed_gate(g, width) * m;
  return m;
}

}  // namespace gswb::testutil
