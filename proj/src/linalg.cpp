#include "gswb/linalg.hpp"

#include <algorithm>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace gswb {

std::vector<double> hermitian_eigenvalues(const Mat& h) {
  if (h.rows() != h.cols())
    throw Error(ErrorCode::invalid_argument, "eigensolve needs a square matrix");
  Mat a = h;
  lapack_int n = lapack_int(a.rows());
  std::vector<double> w(n);
  lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0)
    throw Error(ErrorCode::nonconvergence,
                "eigenvalue solver failed (info=" + std::to_string(info) + ")");
  return w;
}

EigenPairs lowest_eigenpairs(const Mat& h, int k) {
  if (h.rows() != h.cols())
    throw Error(ErrorCode::invalid_argument, "eigensolve needs a square matrix");
  lapack_int n = lapack_int(h.rows());
  if (k < 1 || k > n)
    throw Error(ErrorCode::invalid_argument, "eigenpair count out of range");
  Mat a = h;
  EigenPairs out;
  out.values.assign(n, 0.0);
  out.vectors = Mat::Zero(n, k);
  std::vector<lapack_int> isuppz(2 * std::max(1, k));
  lapack_int m = 0;
  lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, k, 0.0, &m,
      out.values.data(), out.vectors.data(), n, isuppz.data());
  if (info != 0 || m < k)
    throw Error(ErrorCode::nonconvergence,
                "eigenpair solver failed (info=" + std::to_string(info) + ")");
  out.values.resize(k);
  return out;
}

double spectral_norm(const Mat& h) {
  std::vector<double> w = hermitian_eigenvalues(h);
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

double smallest_nonzero(const std::vector<double>& ascending, double zero_tol) {
  for (double v : ascending)
    if (v > zero_tol) return v;
  return -1.0;
}

}  // namespace gswb
