#pragma once

#include "gswb/core.hpp"

namespace gswb {

struct Gate {
  std::vector<int> support;  // distinct qubit indices, length 1-3
  Mat block;                 // unitary, dim 2^|support|
};

struct RegisterLayout {
  Span proof;    // register B
  Span ancilla;  // register C
  int output = 0;
};

struct QuantumCircuit {
  int width = 0;
  std::vector<Gate> gates;
  RegisterLayout layout;

  int proof_size() const { return layout.proof.size(); }
  int ancilla_size() const { return layout.ancilla.size(); }
};

struct QmsaInstance {
  QuantumCircuit circuit;
  int g = 0;
  int g_prime = 0;
  int repetitions = 1;
};

struct CircuitDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Gate make_gate(std::vector<int> support, Mat block);
Mat pauli_x();
Mat identity_gate(int qubits = 1);
Mat hadamard();
Mat cnot();  // control = first support qubit
Mat controlled(const Mat& u);  // |0><0| x I + |1><1| x u, control first

CircuitDiagnostics validate_circuit(const QuantumCircuit& c);

// In-place gate application on a 2^width statevector. Qubit 0 is the most
// significant index bit.
void apply_gate(Vec& state, int width, const Gate& g);

Vec simulate_statevector(const QuantumCircuit& c, const std::vector<int>& proof,
                         int width_limit = kDefaultWidthLimit);

double acceptance_probability(const QuantumCircuit& c,
                              const std::vector<int>& proof,
                              int width_limit = kDefaultWidthLimit);

// Runs r copies of the verifier on fresh ancillas and ANDs their outputs
// (Toffoli chain), so per-proof error decays exponentially in r.
QuantumCircuit amplify_circuit(const QuantumCircuit& c, int repetitions);

// Smallest e such that every basis proof is accepted with probability >= 1-e
// or <= e; found by enumerating all 2^n proofs.
double measured_error(const QuantumCircuit& c, int proof_limit = 16,
                      int width_limit = kDefaultWidthLimit);

// Probability of measuring |pattern> on the given qubits.
double basis_weight(const Vec& state, int width, const std::vector<int>& qubits,
                    const std::vector<int>& pattern);

}  // namespace gswb
