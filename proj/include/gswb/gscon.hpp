#pragma once

#include "gswb/circuit.hpp"
#include "gswb/hamiltonian.hpp"
#include "gswb/kitaev.hpp"

namespace gswb {

// Register map of a traversal instance. B/C/D carry the verifier's clock
// Hamiltonian; E is the 3-qubit GO flag, F/G shadow the proof, K is the unary
// move counter with 2-bit phase L, and M is the per-slot gate counter.
struct GsconRegisters {
  Span B, C, D, E, F, G, K, L, M;
};

struct GsconInstance {
  int width = 0;
  GsconRegisters reg;
  std::vector<LocalTerm> terms;  // full Hamiltonian
  std::vector<int> start, target;
  long long m = 0;        // YES path-length budget
  long long m_prime = 0;  // NO lower bound on low-energy paths
  double eta1 = 0, eta2 = 0, eta3 = 0, eta4 = 0;
  double mu = 0;
  double alpha = 0, beta = 0;
  double epsilon = 0;  // measured verifier error after amplification
  int g = 0, g_prime = 0;
  QuantumCircuit verifier;  // 2-local amplified verifier
  QuantumCircuit w;         // history-preparation circuit of the verifier

  std::vector<LocalTerm> gated_terms() const;       // clock terms x P_E
  std::vector<LocalTerm> structure_terms() const;   // move-counter constraints
};

// Phase pattern of the 2-bit L register at move-counter value idx.
std::vector<int> timestep_pattern(long long idx);

// Which L bit a single counter advance idx -> idx+1 flips (0 or 1).
int timestep_flip_bit(long long idx);

GsconInstance compile_gscon(const QmsaInstance& qmsa,
                            int width_limit = kDefaultWidthLimit);

// 2-local unitary path from `start` to `target` for an accepted proof whose
// intermediate energies stay at 0 except for the two GO moves (<= eta1).
std::vector<Gate> honest_gscon_path(const GsconInstance& inst,
                                    const std::vector<int>& proof);

struct PathVerdict {
  bool ok = false;
  long long length = 0;
  double max_energy = 0;       // largest intermediate expectation
  double final_distance = 0;   // l2 distance of the end state to |target>
  std::vector<std::string> violations;
  std::vector<double> energies;
};

// Simulates the path from |start> and checks 2-locality, unitarity,
// intermediate energies <= eta1 + slack, length <= m, and the end state.
PathVerdict verify_gscon_path(const GsconInstance& inst,
                              const std::vector<Gate>& path,
                              double energy_slack = 1e-8,
                              double final_tol = 1e-8,
                              int width_limit = kDefaultWidthLimit);

}  // namespace gswb
