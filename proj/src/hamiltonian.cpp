#include "gswb/hamiltonian.hpp"

#include <array>

#include "gswb/linalg.hpp"

namespace gswb {

std::string tag_name(TermTag t) {
  switch (t) {
    case TermTag::in: return "in";
    case TermTag::prop: return "prop";
    case TermTag::out: return "out";
    case TermTag::stab: return "stab";
    case TermTag::amp: return "amp";
    case TermTag::gated: return "gated";
  }
  return "amp";
}

TermTag tag_from_name(const std::string& s) {
  if (s == "in") return TermTag::in;
  if (s == "prop") return TermTag::prop;
  if (s == "out") return TermTag::out;
  if (s == "stab") return TermTag::stab;
  if (s == "amp") return TermTag::amp;
  if (s == "gated") return TermTag::gated;
  throw Error(ErrorCode::parse, "unknown term tag: " + s);
}

Mat basis_projector(const std::vector<int>& pattern) {
  int d = 1 << pattern.size();
  Mat p = Mat::Zero(d, d);
  std::uint64_t idx = basis_index(pattern);
  p(idx, idx) = 1.0;
  return p;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

TermDiagnostics validate_terms(const std::vector<LocalTerm>& terms, int width) {
  TermDiagnostics d;
  auto bad = [&](const std::string& s) { d.violations.push_back(s); };
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const LocalTerm& t = terms[i];
    std::string where = "term " + std::to_string(i) + ": ";
    for (std::size_t j = 0; j < t.support.size(); ++j) {
      if (t.support[j] < 0 || t.support[j] >= width) bad(where + "support out of range");
      for (std::size_t k = j + 1; k < t.support.size(); ++k)
        if (t.support[j] == t.support[k]) bad(where + "repeated support qubit");
    }
    int dim = 1 << t.support.size();
    if (t.block.rows() != dim || t.block.cols() != dim) {
      bad(where + "block dimension must be 2^|support|");
      continue;
    }
    if (!is_hermitian(t.block)) {
      bad(where + "block not Hermitian");
      continue;
    }
    std::vector<double> eig = hermitian_eigenvalues(t.block);
    if (eig.front() < tol::psd) bad(where + "block not positive semidefinite");
    if (eig.back() > 1.0 + 1e-9) bad(where + "block norm exceeds 1");
  }
  return d;
}

namespace {

struct SupportMasks {
  std::uint64_t smask = 0;
  std::vector<std::uint64_t> pat;
};

SupportMasks masks_for(const std::vector<int>& support, int width) {
  int k = int(support.size());
  SupportMasks m;
  m.pat.assign(std::size_t(1) << k, 0);
  for (int i = 0; i < k; ++i) {
    std::uint64_t bit = std::uint64_t(1) << (width - 1 - support[i]);
    m.smask |= bit;
    for (std::size_t s = 0; s < m.pat.size(); ++s)
      if ((s >> (k - 1 - i)) & 1) m.pat[s] |= bit;
  }
  return m;
}

}  // namespace

Mat dense_from_terms(const std::vector<LocalTerm>& terms, int width,
                     int dense_limit) {
  if (width > dense_limit)
    throw Error(ErrorCode::resource_limit,
                "dense matrix over " + std::to_string(width) +
                    " qubits exceeds limit " + std::to_string(dense_limit));
  std::uint64_t dim = std::uint64_t(1) << width;
  Mat h = Mat::Zero(dim, dim);
  for (const LocalTerm& t : terms) {
    SupportMasks m = masks_for(t.support, width);
    std::uint64_t d = m.pat.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & m.smask) continue;
      for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t s = 0; s < d; ++s)
          h(base | m.pat[r], base | m.pat[s]) += t.coeff * t.block(r, s);
    }
  }
  return h;
}

double expectation(const std::vector<LocalTerm>& terms, const Vec& state,
                   int width) {
  if (std::uint64_t(state.size()) != (std::uint64_t(1) << width))
    throw Error(ErrorCode::dimension_mismatch, "state size is not 2^width");
  std::uint64_t dim = state.size();
  double total = 0;
  for (const LocalTerm& t : terms) {
    SupportMasks m = masks_for(t.support, width);
    std::uint64_t d = m.pat.size();
    cplx acc = 0;
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & m.smask) continue;
      for (std::uint64_t r = 0; r < d; ++r) {
        cplx a = std::conj(state[base | m.pat[r]]);
        if (a == cplx(0)) continue;
        for (std::uint64_t s = 0; s < d; ++s)
          acc += a * t.block(r, s) * state[base | m.pat[s]];
      }
    }
    total += t.coeff * acc.real();
  }
  return total;
}

void apply_terms(const std::vector<LocalTerm>& terms, const Vec& state,
                 int width, Vec& out) {
  if (state.size() != out.size())
    throw Error(ErrorCode::dimension_mismatch, "apply_terms buffer mismatch");
  std::uint64_t dim = state.size();
  std::array<cplx, 256> amp{};
  for (const LocalTerm& t : terms) {
    SupportMasks m = masks_for(t.support, width);
    std::uint64_t d = m.pat.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & m.smask) continue;
      for (std::uint64_t s = 0; s < d; ++s) amp[s] = state[base | m.pat[s]];
      for (std::uint64_t r = 0; r < d; ++r) {
        cplx v = 0;
        for (std::uint64_t s = 0; s < d; ++s) v += t.block(r, s) * amp[s];
        out[base | m.pat[r]] += t.coeff * v;
      }
    }
  }
}

double diagonal_energy(const std::vector<LocalTerm>& terms,
                       const std::vector<int>& bits) {
  double e = 0;
  for (const LocalTerm& t : terms) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < t.support.size(); ++i)
      s = (s << 1) | std::uint64_t(bits.at(t.support[i]) & 1);
    e += t.coeff * t.block(s, s).real();
  }
  return e;
}

}  // namespace gswb
