#pragma once

#include "gswb/circuit.hpp"
#include "gswb/hamiltonian.hpp"

namespace gswb {

struct GroundEnergy {
  double value = 0;
  bool dense = false;      // solved by full diagonalization
  int iterations = 0;      // power-iteration count when not dense
  double residual = 0;     // ||H v - value v|| of the returned estimate
  Vec state;               // ground state (dense) or best iterate
};

// Smallest eigenvalue of sum of terms. Dense diagonalization up to
// dense_limit qubits, otherwise shifted power iteration using only
// matrix-vector products.
GroundEnergy ground_energy(const std::vector<LocalTerm>& terms, int width,
                           int dense_limit = kDefaultDenseLimit,
                           int max_iterations = 20000,
                           double residual_tol = 1e-8, std::uint64_t seed = 1);

// Reduced density matrix of |state><state| on the given qubits.
Mat reduced_density(const Vec& state, int width, const std::vector<int>& qubits);

// Nonzero Schmidt coefficients (descending) across the cut
// (qubits_A : rest), squared values summing to 1.
std::vector<double> schmidt_coefficients(const Vec& state, int width,
                                         const std::vector<int>& qubits_A,
                                         double cutoff = tol::schmidt);

// Von Neumann entropy in bits of the reduced state on qubits_A.
double entanglement_entropy(const Vec& state, int width,
                            const std::vector<int>& qubits_A);

// Von Neumann entropy in bits of a density matrix.
double matrix_entropy(const Mat& rho);

// Trace distance (1/2)||rho - sigma||_1.
double trace_distance(const Mat& rho, const Mat& sigma);

// Audenaert's sharpening of the Fannes bound:
// |S(rho) - S(sigma)| <= t log2(d-1) + h2(t) for t = trace_distance <= 1-1/d.
double entropy_continuity_bound(double t, int dim);

// Largest over the path of the state weight outside S union T, where S and T
// are basis-pattern subspaces on `qubits` (all other qubits free).
double traversal_max_overlap(const std::vector<Vec>& path, int width,
                             const std::vector<int>& qubits,
                             const std::vector<int>& pattern_S,
                             const std::vector<int>& pattern_T);

// Lower bound ((1 - 2 eps) / (2 m))^2 that some path state must exceed when
// the endpoints sit eps-close to orthogonal subspaces S and T.
double traversal_lower_bound(double eps, int path_length);

// Perturbation analysis of H = H1 + H2 where H1 >> H2: bounds the ground
// energy of H by the ground energy of H2 restricted to the null space S of
// H1. Requires J > 2K for J = smallest nonzero eigenvalue of H1 and
// K = ||H2||. Dense only.
struct ProjectionDiagnostics {
  double J = 0;              // spectral gap of H1 above its null space
  double K = 0;              // ||H2||
  double lambda = 0;         // ground energy of H1 + H2
  double lambda_restricted = 0;  // ground energy of H2 restricted to S
  double lower_bound = 0;    // lambda_restricted - K^2/(J - 2K)
  double overlap = 0;        // |<psi|psi'>|^2, psi' = projection of psi onto S
  double overlap_bound = 0;  // 1 - ((K + sqrt(K^2 + delta(J-2K)))/(J-2K))^2
  double projected_energy = 0;  // <psi'|H|psi'>
  double projected_energy_bound = 0;
  double delta = 0;          // lambda - lambda_restricted + ... slack parameter
  bool sandwich_holds = false;
  bool overlap_holds = false;
  bool projected_energy_holds = false;
  bool ok() const {
    return sandwich_holds && overlap_holds && projected_energy_holds;
  }
};
ProjectionDiagnostics projection_diagnostics(
    const std::vector<LocalTerm>& h1, const std::vector<LocalTerm>& h2,
    int width, double delta, int dense_limit = kDefaultDenseLimit);

}  // namespace gswb
