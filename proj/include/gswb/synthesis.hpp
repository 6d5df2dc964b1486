#pragma once

#include "gswb/circuit.hpp"

namespace gswb {

// Principal square root of a 2x2 unitary.
Mat sqrt_unitary(const Mat& u);

struct ControlledForm {
  bool found = false;
  int control = 0;  // position within the gate's support
  Mat target_u;     // action on the remaining qubit(s) when the control is 1
};

// Detect whether a 4x4 unitary is a singly controlled 1-qubit gate
// (control polarity 1, either qubit as control).
ControlledForm controlled_form_2q(const Mat& u4);

// Doubly controlled 1-qubit gate, exactly, as 5 two-qubit gates.
// c_keep is only ever a control; c_flip additionally receives the two CX
// corrections, so pass the qubit that may be freely toggled there.
void emit_ccu(std::vector<Gate>& out, int c_keep, int c_flip, int target,
              const Mat& u2);

// Gate sequence on <= 2 qubits whose ordered product equals g controlled on
// qubit `control` (polarity 1), exactly including global phase. The control
// qubit is only ever a control or a phase target. If g is itself a singly
// controlled 1-qubit gate, its inner control qubit is never X-targeted.
std::vector<Gate> synthesize_controlled(int control, const Gate& g);

// Rewrite every 3-qubit gate (which must be controlled on one of its qubits)
// into an exact <= 2-qubit sequence. 1-/2-qubit gates pass through unchanged.
QuantumCircuit decompose_to_2local(const QuantumCircuit& c);

}  // namespace gswb
