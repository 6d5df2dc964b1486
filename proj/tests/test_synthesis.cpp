#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gswb/synthesis.hpp"

using namespace gswb;
using namespace gswb::testutil;

TEST_CASE("sqrt_unitary squares back") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Mat u = random_unitary(2, rng);
    Mat v = sqrt_unitary(u);
    CHECK(is_unitary(v, 1e-10));
    CHECK((v * v - u).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("controlled_form_2q recognizes controls on either qubit") {
  std::mt19937_64 rng(3);
  Mat u = random_unitary(2, rng);
  ControlledForm f = controlled_form_2q(controlled(u));
  REQUIRE(f.found);
  CHECK(f.control == 0);
  CHECK((f.target_u - u).cwiseAbs().maxCoeff() < 1e-12);
  // control on the second qubit: swap-conjugated controlled gate
  Mat swapped = Mat::Zero(4, 4);
  // |ab> -> |ba>
  int perm[4] = {0, 2, 1, 3};
  Mat cu = controlled(u);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) swapped(perm[r], perm[c]) = cu(r, c);
  ControlledForm f2 = controlled_form_2q(swapped);
  REQUIRE(f2.found);
  CHECK(f2.control == 1);
  CHECK_FALSE(controlled_form_2q(random_unitary(4, rng)).found);
}

TEST_CASE("emit_ccu builds a doubly controlled gate") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    Mat u = random_unitary(2, rng);
    std::vector<Gate> seq;
    emit_ccu(seq, 0, 1, 2, u);
    Mat got = product_of(seq, 3);
    Mat expect = controlled(controlled(u));
    CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("emit_ccu never X-targets the kept control") {
  std::mt19937_64 rng(19);
  std::vector<Gate> seq;
  emit_ccu(seq, 0, 1, 2, random_unitary(2, rng));
  for (const Gate& g : seq) {
    // qubit 0 may appear only as the control (first support slot) of a
    // controlled 2-qubit gate
    if (g.support.size() == 2) CHECK(g.support[1] != 0);
  }
}

TEST_CASE("synthesize_controlled is exact for generic 2-qubit targets") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 8; ++t) {
    Mat u = random_unitary(4, rng);
    std::vector<Gate> seq = synthesize_controlled(0, make_gate({1, 2}, u));
    for (const Gate& g : seq) CHECK(g.support.size() <= 2);
    Mat got = product_of(seq, 3);
    Mat expect = controlled(u);
    CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("synthesize_controlled handles 1-qubit targets and identities") {
  std::mt19937_64 rng(29);
  Mat u = random_unitary(2, rng);
  std::vector<Gate> seq = synthesize_controlled(2, make_gate({0}, u));
  REQUIRE(seq.size() == 1);
  CHECK(synthesize_controlled(1, make_gate({0}, identity_gate())).empty());
}

TEST_CASE("decompose_to_2local reproduces a Toffoli exactly") {
  QuantumCircuit c;
  c.width = 3;
  c.layout.proof = {0, 2};
  c.layout.ancilla = {2, 3};
  c.layout.output = 2;
  c.gates.push_back(make_gate({0, 1, 2}, controlled(controlled(pauli_x()))));
  QuantumCircuit d = decompose_to_2local(c);
  CHECK(d.gates.size() > 1);
  for (const Gate& g : d.gates) CHECK(g.support.size() <= 2);
  Mat got = product_of(d.gates, 3);
  Mat expect = product_of(c.gates, 3);
  CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("decompose_to_2local rejects unstructured 3-qubit gates") {
  std::mt19937_64 rng(31);
  QuantumCircuit c;
  c.width = 3;
  c.layout.proof = {0, 2};
  c.layout.ancilla = {2, 3};
  c.layout.output = 2;
  c.gates.push_back(make_gate({0, 1, 2}, random_unitary(8, rng)));
  CHECK_THROWS_AS((void)decompose_to_2local(c), Error);
}
