#pragma once

#include "gswb/circuit.hpp"
#include "gswb/hamiltonian.hpp"

namespace gswb {

// Entanglement-witness instance: the verifier is padded with per-proof-bit
// copy (S1) and superposition (S2) stages acting on fresh registers E/E' and
// F/F', then compiled into a clock Hamiltonian. Low-energy states of YES
// instances have low entanglement across partition A = E u F; NO instances
// force entropy scaling with the proof weight.
struct GseRegisters {
  Span B, C, E, Ep, F, Fp, D;
};

struct GseInstance {
  int width = 0;  // including the clock
  GseRegisters reg;
  std::vector<LocalTerm> terms;
  std::vector<int> partition_A;  // E u F
  int T_prime = 0;               // gates in the padded circuit
  double eta1 = 0, eta2 = 0, eta3 = 0, eta4 = 0;
  double mu = 0;
  double alpha = 0, beta = 0;
  double epsilon = 0;
  int g = 0, g_prime = 0;
  QuantumCircuit w;  // padded circuit (without the clock register)
};

// Copy stage: on (b, e, e') flips e and e' when b = 1.
Mat s1_gate();
// Superposition stage: on (b, f, f') maps |100> to (|100> + |111>)/sqrt(2).
Mat s2_gate();

// Padded circuit over B, C, E, E', F, F' (in that qubit order).
QuantumCircuit build_gse_circuit(const QuantumCircuit& verifier);

GseInstance compile_gse(const QmsaInstance& qmsa,
                        int width_limit = kDefaultWidthLimit);

// Norm of the projection of each gate prefix of W applied to |p>_B |0> onto
// the subspace E = E' = p, F = F' = x; entries for t = 0..T'.
std::vector<double> prefix_projection_norms(const GseInstance& inst,
                                            const std::vector<int>& p,
                                            const std::vector<int>& x);

// History state of the padded circuit for a basis proof.
Vec gse_history_state(const GseInstance& inst, const std::vector<int>& proof,
                      int width_limit = kDefaultWidthLimit);

}  // namespace gswb
