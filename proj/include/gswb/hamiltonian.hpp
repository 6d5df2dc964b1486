#pragma once

#include "gswb/core.hpp"

namespace gswb {

enum class TermTag { in, prop, out, stab, amp, gated };

std::string tag_name(TermTag t);
TermTag tag_from_name(const std::string& s);

struct LocalTerm {
  std::vector<int> support;  // ordered distinct qubit indices
  Mat block;                 // Hermitian, PSD, norm <= 1
  double coeff = 1.0;        // scale factor (mu etc.) kept outside the block
  TermTag tag = TermTag::amp;
};

struct TermDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

TermDiagnostics validate_terms(const std::vector<LocalTerm>& terms, int width);

// Projector |pattern><pattern| on len(pattern) qubits.
Mat basis_projector(const std::vector<int>& pattern);

// Kronecker product in qubit order (first argument = more significant bits).
Mat kron(const Mat& a, const Mat& b);

// Dense 2^width matrix; guarded by dense_limit.
Mat dense_from_terms(const std::vector<LocalTerm>& terms, int width,
                     int dense_limit = kDefaultDenseLimit);

// <state|H|state> evaluated term-by-term without building the dense matrix.
double expectation(const std::vector<LocalTerm>& terms, const Vec& state,
                   int width);

// out += H * state, term-by-term.
void apply_terms(const std::vector<LocalTerm>& terms, const Vec& state,
                 int width, Vec& out);

// <basis|H|basis> for a computational basis state, via diagonal entries only.
double diagonal_energy(const std::vector<LocalTerm>& terms,
                       const std::vector<int>& bits);

}  // namespace gswb
