#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gswb {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Global tolerances (overridable per call where it matters).
namespace tol {
inline constexpr double norm = 1e-9;        // state normalization
inline constexpr double hermitian = 1e-10;  // Hermiticity / unitarity
inline constexpr double psd = -1e-10;       // eigenvalue floor for PSD checks
inline constexpr double schmidt = 1e-12;    // singular value cutoff
}  // namespace tol

inline constexpr int kDefaultWidthLimit = 24;  // statevector qubit cap
inline constexpr int kDefaultDenseLimit = 14;  // dense eigensolve qubit cap

enum class ErrorCode {
  invalid_argument,
  parse,
  resource_limit,
  precondition,
  nonconvergence,
  degenerate_instance,
  dimension_mismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Half-open qubit index range [lo, hi).
struct Span {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo; }
  bool contains(int q) const { return q >= lo && q < hi; }
};

// Convention: qubit 0 is the most significant bit of a basis index, so the
// basis label of |b0 b1 ... b_{w-1}> reads left to right.
inline std::uint64_t bit_mask(int qubit, int width) {
  return std::uint64_t(1) << (width - 1 - qubit);
}

inline int get_bit(std::uint64_t idx, int qubit, int width) {
  return int((idx >> (width - 1 - qubit)) & 1u);
}

inline std::uint64_t basis_index(const std::vector<int>& bits) {
  std::uint64_t idx = 0;
  for (int b : bits) idx = (idx << 1) | std::uint64_t(b & 1);
  return idx;
}

inline std::vector<int> index_bits(std::uint64_t idx, int width) {
  std::vector<int> bits(width);
  for (int q = 0; q < width; ++q) bits[q] = get_bit(idx, q, width);
  return bits;
}

inline std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline std::vector<int> string_to_bits(const std::string& s) {
  std::vector<int> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::parse, "bit string must contain only 0/1");
    bits.push_back(c - '0');
  }
  return bits;
}

inline int hamming_weight(const std::vector<int>& bits) {
  int w = 0;
  for (int b : bits) w += (b != 0);
  return w;
}

inline bool is_unitary(const Mat& u, double eps = tol::hermitian) {
  if (u.rows() != u.cols()) return false;
  Mat d = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= eps;
}

inline bool is_hermitian(const Mat& h, double eps = tol::hermitian) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

}  // namespace gswb
