#include "gswb/qverify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gswb/linalg.hpp"

namespace gswb {

GroundEnergy ground_energy(const std::vector<LocalTerm>& terms, int width,
                           int dense_limit, int max_iterations,
                           double residual_tol, std::uint64_t seed) {
  GroundEnergy g;
  if (width <= dense_limit) {
    Mat h = dense_from_terms(terms, width, dense_limit);
    EigenPairs p = lowest_eigenpairs(h, 1);
    g.value = p.values[0];
    g.state = p.vectors.col(0);
    g.dense = true;
    g.residual = (h * g.state - g.value * g.state).norm();
    return g;
  }
  if (width > kDefaultWidthLimit)
    throw Error(ErrorCode::resource_limit,
                "iterative ground energy over " + std::to_string(width) +
                    " qubits exceeds the statevector cap");
  // Shift c >= lambda_max so that c I - H has the ground state as its top
  // eigenvector; sum of term norms bounds the spectrum.
  double c = 0;
  for (const LocalTerm& t : terms)
    c += std::abs(t.coeff) * spectral_norm(t.block);
  std::uint64_t dim = std::uint64_t(1) << width;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vec v(dim);
  for (std::uint64_t i = 0; i < dim; ++i) v[i] = cplx(gauss(rng), gauss(rng));
  v.normalize();
  Vec hv = Vec::Zero(dim);
  double value = 0;
  int it = 0;
  for (; it < max_iterations; ++it) {
    hv.setZero();
    apply_terms(terms, v, width, hv);
    value = v.dot(hv).real();
    double res = (hv - value * v).norm();
    g.residual = res;
    if (res <= residual_tol) break;
    Vec next = c * v - hv;
    double n = next.norm();
    if (n <= 1e-300)
      throw Error(ErrorCode::nonconvergence, "power iteration collapsed");
    v = next / n;
  }
  if (g.residual > residual_tol)
    throw Error(ErrorCode::nonconvergence,
                "power iteration did not reach residual tolerance");
  g.value = value;
  g.state = std::move(v);
  g.iterations = it;
  return g;
}

namespace {

// Rearranged amplitudes: row index over qubits_A (in the given order), column
// index over the remaining qubits (ascending).
Mat bipartition_matrix(const Vec& state, int width,
                       const std::vector<int>& qubits_A) {
  std::uint64_t dim = std::uint64_t(1) << width;
  if (std::uint64_t(state.size()) != dim)
    throw Error(ErrorCode::dimension_mismatch, "state size is not 2^width");
  std::vector<bool> in_a(width, false);
  for (int q : qubits_A) {
    if (q < 0 || q >= width)
      throw Error(ErrorCode::invalid_argument, "partition qubit out of range");
    if (in_a[q])
      throw Error(ErrorCode::invalid_argument, "repeated partition qubit");
    in_a[q] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < width; ++q)
    if (!in_a[q]) rest.push_back(q);
  int ka = int(qubits_A.size()), kb = int(rest.size());
  Mat m = Mat::Zero(std::uint64_t(1) << ka, std::uint64_t(1) << kb);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (state[i] == cplx(0)) continue;
    std::uint64_t r = 0, cidx = 0;
    for (int j = 0; j < ka; ++j)
      r = (r << 1) | std::uint64_t(get_bit(i, qubits_A[j], width));
    for (int j = 0; j < kb; ++j)
      cidx = (cidx << 1) | std::uint64_t(get_bit(i, rest[j], width));
    m(r, cidx) = state[i];
  }
  return m;
}

double binary_entropy(double p) {
  double h = 0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

}  // namespace

Mat reduced_density(const Vec& state, int width,
                    const std::vector<int>& qubits) {
  Mat m = bipartition_matrix(state, width, qubits);
  return m * m.adjoint();
}

std::vector<double> schmidt_coefficients(const Vec& state, int width,
                                         const std::vector<int>& qubits_A,
                                         double cutoff) {
  Mat m = bipartition_matrix(state, width, qubits_A);
  // Eigenvalues of the Gram matrix on the smaller side are the squared
  // Schmidt coefficients.
  Mat gram = m.rows() <= m.cols() ? Mat(m * m.adjoint()) : Mat(m.adjoint() * m);
  std::vector<double> ev = hermitian_eigenvalues(gram);
  std::vector<double> out;
  for (auto it = ev.rbegin(); it != ev.rend(); ++it) {
    if (*it <= cutoff) break;
    out.push_back(std::sqrt(*it));
  }
  return out;
}

double entanglement_entropy(const Vec& state, int width,
                            const std::vector<int>& qubits_A) {
  std::vector<double> sc = schmidt_coefficients(state, width, qubits_A);
  double s = 0;
  for (double c : sc) {
    double p = c * c;
    s -= p * std::log2(p);
  }
  return s;
}

double matrix_entropy(const Mat& rho) {
  std::vector<double> ev = hermitian_eigenvalues(rho);
  double s = 0;
  for (double p : ev)
    if (p > tol::schmidt) s -= p * std::log2(p);
  return s;
}

double trace_distance(const Mat& rho, const Mat& sigma) {
  std::vector<double> ev = hermitian_eigenvalues(Mat(rho - sigma));
  double s = 0;
  for (double v : ev) s += std::abs(v);
  return 0.5 * s;
}

double entropy_continuity_bound(double t, int dim) {
  if (dim < 2) throw Error(ErrorCode::invalid_argument, "dimension must be >= 2");
  if (t < 0 || t > 1)
    throw Error(ErrorCode::invalid_argument, "trace distance must be in [0,1]");
  if (t == 0) return 0;
  double tmax = 1.0 - 1.0 / dim;
  double tt = std::min(t, tmax);
  return tt * std::log2(double(dim - 1)) + binary_entropy(tt);
}

double traversal_max_overlap(const std::vector<Vec>& path, int width,
                             const std::vector<int>& qubits,
                             const std::vector<int>& pattern_S,
                             const std::vector<int>& pattern_T) {
  double best = 0;
  for (const Vec& v : path) {
    double w = 1.0 - basis_weight(v, width, qubits, pattern_S) -
               basis_weight(v, width, qubits, pattern_T);
    best = std::max(best, w);
  }
  return best;
}

double traversal_lower_bound(double eps, int path_length) {
  if (path_length < 1)
    throw Error(ErrorCode::invalid_argument, "path length must be >= 1");
  double q = (1.0 - 2.0 * eps) / (2.0 * double(path_length));
  return q * q;
}

ProjectionDiagnostics projection_diagnostics(const std::vector<LocalTerm>& h1,
                                             const std::vector<LocalTerm>& h2,
                                             int width, double delta,
                                             int dense_limit) {
  if (delta < 0)
    throw Error(ErrorCode::invalid_argument, "delta must be nonnegative");
  ProjectionDiagnostics d;
  d.delta = delta;
  Mat m1 = dense_from_terms(h1, width, dense_limit);
  Mat m2 = dense_from_terms(h2, width, dense_limit);
  std::vector<double> ev1 = hermitian_eigenvalues(m1);
  d.K = spectral_norm(m2);
  double zero_tol = std::max(1e-9, 1e-12 * std::abs(ev1.back()));
  int null_dim = 0;
  while (null_dim < int(ev1.size()) && ev1[null_dim] <= zero_tol) ++null_dim;
  if (null_dim == 0)
    throw Error(ErrorCode::degenerate_instance, "H1 has no null space");
  if (null_dim == int(ev1.size()))
    throw Error(ErrorCode::degenerate_instance, "H1 vanishes");
  d.J = ev1[null_dim];
  if (d.J <= 2.0 * d.K)
    throw Error(ErrorCode::precondition,
                "projection analysis requires J > 2K (J=" +
                    std::to_string(d.J) + ", K=" + std::to_string(d.K) + ")");
  EigenPairs low = lowest_eigenpairs(m1, null_dim);
  Mat s = low.vectors;  // orthonormal basis of the null space of H1

  Mat restricted = s.adjoint() * m2 * s;
  std::vector<double> evr = hermitian_eigenvalues(restricted);
  d.lambda_restricted = evr.front();

  Mat h = m1 + m2;
  EigenPairs gp = lowest_eigenpairs(h, 1);
  d.lambda = gp.values[0];
  Vec psi = gp.vectors.col(0);

  // inequality slack scales with the penalty norm: eigensolve accuracy is
  // relative to ||H1 + H2||, which mu-scaled instances push to ~1e8
  double slack = std::max(1e-9, 1e-13 * (std::abs(ev1.back()) + d.K));
  d.lower_bound = d.lambda_restricted - d.K * d.K / (d.J - 2.0 * d.K);
  d.sandwich_holds = d.lambda >= d.lower_bound - slack &&
                     d.lambda <= d.lambda_restricted + slack;

  Vec proj = s * (s.adjoint() * psi);
  double pn = proj.norm();
  d.overlap = pn * pn;
  double root = d.K + std::sqrt(d.K * d.K + delta * (d.J - 2.0 * d.K));
  double frac = root / (d.J - 2.0 * d.K);
  d.overlap_bound = 1.0 - frac * frac;
  d.overlap_holds = d.overlap >= d.overlap_bound - slack;

  if (pn <= tol::schmidt)
    throw Error(ErrorCode::degenerate_instance,
                "ground state has no component in the null space of H1");
  Vec psi_p = proj / pn;
  d.projected_energy = (psi_p.dot(h * psi_p)).real();
  d.projected_energy_bound =
      d.lambda + delta + 2.0 * d.K * root / (d.J - 2.0 * d.K);
  d.projected_energy_holds =
      d.projected_energy <= d.projected_energy_bound + slack;
  return d;
}

}  // namespace gswb
