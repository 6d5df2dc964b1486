#pragma once

#include "gswb/circuit.hpp"
#include "gswb/hamiltonian.hpp"

namespace gswb {

struct KitaevHamiltonian {
  int n_total = 0;        // circuit qubits plus clock
  int circuit_width = 0;  // proof + ancilla
  int T = 0;              // gate count (>= 1; zero-gate inputs are padded)
  Span clock;             // unary clock register, |t> = 1^t 0^(T-t)
  std::vector<LocalTerm> in, prop, out, stab;
  bool padded = false;  // true when an identity gate was inserted

  std::vector<LocalTerm> all() const;
  std::vector<LocalTerm> frustration_free_part() const;  // in + prop + stab
};

// YES/NO ground-energy bounds of the clock Hamiltonian as a function of the
// gate count and the verifier's error:
//   alpha = eps/(T+1),  beta = pi^2 (1 - sqrt(eps)) / (2 (T+1)^3).
struct EnergyBounds {
  double alpha = 0;
  double beta = 0;
  double epsilon = 0;
  int T = 0;
  bool beta_above_alpha = false;
};
EnergyBounds kitaev_energy_bounds(int T, double epsilon);

// Lower bound on the smallest nonzero eigenvalue of in + prop + stab.
double clock_gap_bound(int T);

KitaevHamiltonian compile_kitaev(const QuantumCircuit& c);

// Normalized history state over B (x) C (x) D for a basis proof or an
// amplitude vector on B.
Vec history_state(const QuantumCircuit& c, const std::vector<int>& proof,
                  int width_limit = kDefaultWidthLimit);
Vec history_state(const QuantumCircuit& c, const Vec& proof_amps,
                  int width_limit = kDefaultWidthLimit);

// Circuit of 1-/2-qubit gates mapping |x>_B |0>_C |0>_D to the history state
// for every basis proof x: clock-superposition rotations followed by each
// circuit gate applied controlled on its clock qubit.
struct HistoryPrep {
  QuantumCircuit circuit;
  double cost_ratio = 0;  // gates / (T + width)
};
HistoryPrep history_prep_circuit(const QuantumCircuit& c);

// Worst-case gates-per-(T + width) factor of history_prep_circuit.
double history_prep_cost_bound();

}  // namespace gswb
