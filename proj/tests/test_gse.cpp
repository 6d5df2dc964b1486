#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gswb/gse.hpp"
#include "gswb/kitaev.hpp"
#include "gswb/qverify.hpp"

using namespace gswb;
using namespace gswb::testutil;

TEST_CASE("stage gates act as specified") {
  CHECK(is_unitary(s1_gate()));
  CHECK(is_unitary(s2_gate()));
  // s1: |1bc> -> |1 (1-b)(1-c)>
  Vec v = Vec::Zero(8);
  v[basis_index({1, 0, 0})] = 1.0;
  apply_gate(v, 3, make_gate({0, 1, 2}, s1_gate()));
  CHECK(std::abs(v[basis_index({1, 1, 1})] - 1.0) < 1e-12);
  // s2: |100> -> (|100> + |111>)/sqrt(2)
  Vec w = Vec::Zero(8);
  w[basis_index({1, 0, 0})] = 1.0;
  apply_gate(w, 3, make_gate({0, 1, 2}, s2_gate()));
  CHECK(std::abs(w[basis_index({1, 0, 0})] - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(w[basis_index({1, 1, 1})] - 1.0 / std::sqrt(2.0)) < 1e-12);
  // trivial on the honest off-branch: first qubit 0 with a cleared target
  Vec z = Vec::Zero(8);
  z[basis_index({0, 0, 1})] = 1.0;
  apply_gate(z, 3, make_gate({0, 1, 2}, s2_gate()));
  CHECK(std::abs(z[basis_index({0, 0, 1})] - 1.0) < 1e-12);
}

TEST_CASE("padded circuit has the pinned gate count and layout") {
  QuantumCircuit v = copy_verifier();
  QuantumCircuit w = build_gse_circuit(v);
  int n = 1, T = 1;
  CHECK(w.width == v.width + 4 * n);
  CHECK(int(w.gates.size()) == 4 * n + 2 * T);
  QmsaInstance q{v, 1, 1, 1};
  GseInstance inst = compile_gse(q);
  CHECK(inst.T_prime == 4 * n + 2 * T);
  CHECK(inst.width == w.width + inst.T_prime);
  CHECK(int(inst.partition_A.size()) == 2 * n);
  CHECK(inst.eta3 == doctest::Approx(q.g + 1.0));
  CHECK(inst.eta4 == doctest::Approx((q.g_prime - 3.0) / 4.0));
  CHECK(validate_terms(inst.terms, inst.width).ok());
}

TEST_CASE("prefix projection norms follow the closed form") {
  QuantumCircuit v = copy_verifier(2);
  QmsaInstance q{v, 1, 2, 1};
  GseInstance inst = compile_gse(q);
  int n = 2;
  // proof p = 10: support {0}, max set bit j = 0 (0-based slot 1)
  std::vector<int> p = {1, 0};
  std::vector<int> x = {1, 0};  // x = p is always in M_p
  std::vector<double> a = prefix_projection_norms(inst, p, x);
  REQUIRE(int(a.size()) == inst.T_prime + 1);
  double sum = 0;
  for (double ai : a) sum += ai * ai;
  // the squared projection is 1/2^HW(p) from the moment the superposition
  // stage of p's highest set bit j has run (t = n + j + 1) and 0 before
  int hw = 1, j = 0;
  double expect = double(inst.T_prime - n - j) / std::pow(2.0, hw);
  CHECK(sum == doctest::Approx(expect));
  for (int t = 0; t < n + j + 1; ++t) CHECK(a[t] == doctest::Approx(0.0));
  // bracketed by T'/2^(HW+1) and T'/2^HW
  double tp = inst.T_prime;
  CHECK(sum >= tp / std::pow(2.0, hw + 1) - 1e-9);
  CHECK(sum <= tp / std::pow(2.0, hw) + 1e-9);
}

TEST_CASE("history state of the padded circuit is a zero mode") {
  QuantumCircuit v = copy_verifier();
  QmsaInstance q{v, 1, 1, 1};
  GseInstance inst = compile_gse(q);
  Vec h = gse_history_state(inst, {1});
  std::vector<LocalTerm> ff;
  for (const LocalTerm& t : inst.terms)
    if (t.tag != TermTag::out) ff.push_back(t);
  CHECK(expectation(ff, h, inst.width) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("entropy across the partition grows with the proof weight") {
  QuantumCircuit v = copy_verifier(2);
  QmsaInstance q{v, 1, 2, 1};
  GseInstance inst = compile_gse(q);
  double s0 = entanglement_entropy(gse_history_state(inst, {0, 0}),
                                   inst.width, inst.partition_A);
  double s1 = entanglement_entropy(gse_history_state(inst, {1, 0}),
                                   inst.width, inst.partition_A);
  double s2 = entanglement_entropy(gse_history_state(inst, {1, 1}),
                                   inst.width, inst.partition_A);
  CHECK(s0 < s1);
  CHECK(s1 < s2);
  // NO-side structure: entropy at least (HW+1)/4
  CHECK(s1 >= (1.0 + 1.0) / 4.0);
  CHECK(s2 >= (2.0 + 1.0) / 4.0);
  // YES-side: entropy stays below g + 1 for accepted low-weight proofs
  CHECK(s1 <= inst.g + 1.0);
}
