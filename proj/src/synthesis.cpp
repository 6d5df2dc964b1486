#include "gswb/synthesis.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace gswb {

namespace {

constexpr double kExact = 1e-12;

bool is_identity(const Mat& m, double eps = 1e-14) {
  return (m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= eps;
}

}  // namespace

Mat sqrt_unitary(const Mat& u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw Error(ErrorCode::invalid_argument, "sqrt_unitary expects a 2x2 matrix");
  // A unitary is normal, so its Schur form is diagonal.
  Eigen::ComplexSchur<Mat> schur(u);
  Mat q = schur.matrixU();
  Mat t = schur.matrixT();
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = std::sqrt(t(0, 0));
  d(1, 1) = std::sqrt(t(1, 1));
  return q * d * q.adjoint();
}

ControlledForm controlled_form_2q(const Mat& u4) {
  ControlledForm f;
  if (u4.rows() != 4 || u4.cols() != 4) return f;
  for (int cpos = 0; cpos < 2; ++cpos) {
    // index bit of the control within the 2-bit basis label
    int cbit = cpos == 0 ? 1 : 0;
    Mat u = Mat::Zero(2, 2);
    bool ok = true;
    for (int r = 0; r < 4 && ok; ++r)
      for (int c = 0; c < 4 && ok; ++c) {
        int rc = (r >> cbit) & 1, cc = (c >> cbit) & 1;
        int rt = cbit == 1 ? (r & 1) : (r >> 1);
        int ct = cbit == 1 ? (c & 1) : (c >> 1);
        cplx v = u4(r, c);
        if (rc != cc) {
          if (std::abs(v) > kExact) ok = false;
        } else if (rc == 0) {
          if (std::abs(v - (rt == ct ? 1.0 : 0.0)) > kExact) ok = false;
        } else {
          u(rt, ct) = v;
        }
      }
    if (ok && is_unitary(u, 1e-10)) {
      f.found = true;
      f.control = cpos;
      f.target_u = u;
      return f;
    }
  }
  return f;
}

void emit_ccu(std::vector<Gate>& out, int c_keep, int c_flip, int target,
              const Mat& u2) {
  if (is_identity(u2)) return;
  Mat v = sqrt_unitary(u2);
  Mat cv = controlled(v);
  Mat cvd = controlled(Mat(v.adjoint()));
  Mat cx = cnot();
  out.push_back(make_gate({c_flip, target}, cv));
  out.push_back(make_gate({c_keep, c_flip}, cx));
  out.push_back(make_gate({c_flip, target}, cvd));
  out.push_back(make_gate({c_keep, c_flip}, cx));
  out.push_back(make_gate({c_keep, target}, cv));
}

namespace {

// One factor of a 4x4 unitary: either a singly controlled 1-qubit gate within
// the pair, or a global phase.
struct Prim {
  bool is_phase = false;
  int cpos = 0;   // 0 = first support qubit controls, 1 = second
  int pol = 1;    // control polarity
  Mat m;          // 2x2 action on the other qubit
  double phi = 0;
};

void push_two_level(std::vector<Prim>& prims, int i, int j, const Mat& m2) {
  // Two-level unitary on basis pair (i, j) of a 2-qubit space, i < j,
  // with block m2 in the (i, j) ordering.
  if (is_identity(m2)) return;
  int diff = i ^ j;
  if (diff == 1 || diff == 2) {
    Prim p;
    p.cpos = diff == 1 ? 0 : 1;  // shared qubit is the control
    p.pol = p.cpos == 0 ? ((i >> 1) & 1) : (i & 1);
    p.m = m2;
    prims.push_back(p);
    return;
  }
  // Pair differs in both bits: conjugate by CX(first -> second) so it differs
  // in the first bit only.
  Mat cx = cnot();
  Mat t = Mat::Identity(4, 4);
  t(i, i) = m2(0, 0);
  t(i, j) = m2(0, 1);
  t(j, i) = m2(1, 0);
  t(j, j) = m2(1, 1);
  Mat tp = cx * t * cx;
  int ip = (i == 0 || i == 1) ? i : (i ^ 1);
  int jp = (j == 2 || j == 3) ? (j ^ 1) : j;
  if (ip > jp) std::swap(ip, jp);
  Mat m2p(2, 2);
  m2p << tp(ip, ip), tp(ip, jp), tp(jp, ip), tp(jp, jp);
  Prim pcx;
  pcx.cpos = 0;
  pcx.pol = 1;
  pcx.m = pauli_x();
  prims.push_back(pcx);
  push_two_level(prims, ip, jp, m2p);
  prims.push_back(pcx);
}

// Factor a 4x4 unitary into Prims, in application order (first entry applied
// first). Exact including global phase.
std::vector<Prim> factor_two_qubit(const Mat& u4) {
  Mat work = u4;
  std::vector<Mat> givens;  // applied from the left, in order
  for (int j = 0; j < 3; ++j) {
    for (int i = j + 1; i < 4; ++i) {
      cplx p = work(j, j), q = work(i, j);
      if (std::abs(q) < 1e-14) continue;
      double r = std::sqrt(std::norm(p) + std::norm(q));
      Mat g = Mat::Identity(4, 4);
      g(j, j) = std::conj(p) / r;
      g(j, i) = std::conj(q) / r;
      g(i, j) = q / r;
      g(i, i) = -p / r;
      work = g * work;
      givens.push_back(g);
    }
  }
  std::vector<Prim> prims;
  // Diagonal remainder: global phase plus two controlled phase blocks.
  cplx d0 = work(0, 0);
  double phi0 = std::arg(d0);
  if (std::abs(phi0) > 1e-15) {
    Prim p;
    p.is_phase = true;
    p.phi = phi0;
    prims.push_back(p);
  }
  Mat low(2, 2), high(2, 2);
  low << 1.0, 0.0, 0.0, work(1, 1) / d0;
  high << work(2, 2) / d0, 0.0, 0.0, work(3, 3) / d0;
  if (!is_identity(low)) {
    Prim p;
    p.cpos = 0;
    p.pol = 0;
    p.m = low;
    prims.push_back(p);
  }
  if (!is_identity(high)) {
    Prim p;
    p.cpos = 0;
    p.pol = 1;
    p.m = high;
    prims.push_back(p);
  }
  // u4 = G_1^dag ... G_k^dag D, so after D apply the adjoints in reverse.
  for (auto it = givens.rbegin(); it != givens.rend(); ++it) {
    Mat gd = it->adjoint();
    // Recover which pair this Givens acts on (its off-diagonal is nonzero).
    int pi = -1, pj = -1;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (pi < 0 &&
            (std::abs((*it)(a, b)) > 1e-14 || std::abs((*it)(b, a)) > 1e-14)) {
          pi = a;
          pj = b;
        }
    if (pi < 0) continue;
    Mat m2(2, 2);
    m2 << gd(pi, pi), gd(pi, pj), gd(pj, pi), gd(pj, pj);
    push_two_level(prims, pi, pj, m2);
  }
  return prims;
}

}  // namespace

std::vector<Gate> synthesize_controlled(int control, const Gate& g) {
  std::vector<Gate> out;
  if (g.support.size() == 1) {
    if (is_identity(g.block)) return out;
    out.push_back(make_gate({control, g.support[0]}, controlled(g.block)));
    return out;
  }
  if (g.support.size() != 2)
    throw Error(ErrorCode::invalid_argument,
                "controlled synthesis supports 1- and 2-qubit targets");
  int qa = g.support[0], qb = g.support[1];
  ControlledForm f = controlled_form_2q(g.block);
  if (f.found) {
    int ic = f.control == 0 ? qa : qb;
    int tq = f.control == 0 ? qb : qa;
    emit_ccu(out, ic, control, tq, f.target_u);
    return out;
  }
  Mat x = pauli_x();
  for (const Prim& p : factor_two_qubit(g.block)) {
    if (p.is_phase) {
      Mat ph = Mat::Identity(2, 2);
      ph(1, 1) = std::exp(cplx(0, p.phi));
      out.push_back(make_gate({control}, ph));
      continue;
    }
    int ic = p.cpos == 0 ? qa : qb;
    int tq = p.cpos == 0 ? qb : qa;
    if (p.pol == 0) out.push_back(make_gate({ic}, x));
    emit_ccu(out, ic, control, tq, p.m);
    if (p.pol == 0) out.push_back(make_gate({ic}, x));
  }
  return out;
}

QuantumCircuit decompose_to_2local(const QuantumCircuit& c) {
  QuantumCircuit out = c;
  out.gates.clear();
  for (const Gate& g : c.gates) {
    if (g.support.size() <= 2) {
      out.gates.push_back(g);
      continue;
    }
    bool done = false;
    for (int cpos = 0; cpos < 3 && !done; ++cpos) {
      int cbit = 2 - cpos;  // index bit of the control in the 3-bit label
      Mat u4 = Mat::Zero(4, 4);
      bool ok = true;
      for (int r = 0; r < 8 && ok; ++r)
        for (int col = 0; col < 8 && ok; ++col) {
          int rc = (r >> cbit) & 1, cc = (col >> cbit) & 1;
          int rr = ((r >> (cbit + 1)) << cbit) | (r & ((1 << cbit) - 1));
          int cr = ((col >> (cbit + 1)) << cbit) | (col & ((1 << cbit) - 1));
          cplx v = g.block(r, col);
          if (rc != cc) {
            if (std::abs(v) > kExact) ok = false;
          } else if (rc == 0) {
            if (std::abs(v - (rr == cr ? 1.0 : 0.0)) > kExact) ok = false;
          } else {
            u4(rr, cr) = v;
          }
        }
      if (!ok || !is_unitary(u4, 1e-10)) continue;
      std::vector<int> rest;
      for (int i = 0; i < 3; ++i)
        if (i != cpos) rest.push_back(g.support[i]);
      std::vector<Gate> seq =
          synthesize_controlled(g.support[cpos], make_gate(rest, u4));
      out.gates.insert(out.gates.end(), seq.begin(), seq.end());
      done = true;
    }
    if (!done)
      throw Error(ErrorCode::invalid_argument,
                  "3-qubit gate is not controlled on any of its qubits");
  }
  return out;
}

}  // namespace gswb
