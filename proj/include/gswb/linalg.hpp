#pragma once

#include "gswb/core.hpp"

namespace gswb {

// All eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const Mat& h);

// Lowest k eigenpairs of a Hermitian matrix, ascending.
struct EigenPairs {
  std::vector<double> values;
  Mat vectors;  // one column per eigenvalue
};
EigenPairs lowest_eigenpairs(const Mat& h, int k);

double spectral_norm(const Mat& h);  // Hermitian input

// Smallest eigenvalue strictly above zero_tol, or -1 if none.
double smallest_nonzero(const std::vector<double>& ascending, double zero_tol);

}  // namespace gswb
