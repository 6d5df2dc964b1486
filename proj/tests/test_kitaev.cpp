#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "common.hpp"
#include "gswb/kitaev.hpp"
#include "gswb/linalg.hpp"
#include "gswb/synthesis.hpp"

using namespace gswb;
using namespace gswb::testutil;

TEST_CASE("energy bound formulas") {
  EnergyBounds b = kitaev_energy_bounds(3, 0.25);
  CHECK(b.alpha == doctest::Approx(0.25 / 4.0));
  CHECK(b.beta ==
        doctest::Approx(std::numbers::pi * std::numbers::pi * 0.5 / 128.0));
  CHECK(clock_gap_bound(2) ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 512.0));
  CHECK_THROWS_AS((void)kitaev_energy_bounds(0, 0.1), Error);
}

TEST_CASE("compile_kitaev term structure") {
  QuantumCircuit c = or_verifier();
  KitaevHamiltonian h = compile_kitaev(c);
  int T = int(c.gates.size());
  CHECK(h.T == T);
  CHECK(h.n_total == c.width + T);
  CHECK(h.in.size() == 1);   // one ancilla qubit
  CHECK(h.out.size() == 1);
  CHECK(int(h.prop.size()) == T);
  CHECK(int(h.stab.size()) == T - 1);
  CHECK(validate_terms(h.all(), h.n_total).ok());
}

TEST_CASE("zero-gate circuits are padded with an identity step") {
  QuantumCircuit c;
  c.width = 2;
  c.layout.proof = {0, 1};
  c.layout.ancilla = {1, 2};
  c.layout.output = 1;
  KitaevHamiltonian h = compile_kitaev(c);
  CHECK(h.padded);
  CHECK(h.T == 1);
}

TEST_CASE("history state is a zero mode of the frustration-free part") {
  QuantumCircuit c = or_verifier();
  KitaevHamiltonian h = compile_kitaev(c);
  for (std::vector<int> proof : {std::vector<int>{0, 0}, {1, 0}, {1, 1}}) {
    Vec hist = history_state(c, proof);
    CHECK(std::abs(hist.norm() - 1.0) < 1e-12);
    CHECK(expectation(h.frustration_free_part(), hist, h.n_total) ==
          doctest::Approx(0.0).epsilon(1e-12));
    double rej = 1.0 - acceptance_probability(c, proof);
    CHECK(expectation(h.out, hist, h.n_total) ==
          doctest::Approx(rej / (h.T + 1)));
  }
}

TEST_CASE("accepted history state energy is at most alpha") {
  QuantumCircuit c = copy_verifier();
  KitaevHamiltonian h = compile_kitaev(c);
  EnergyBounds b = kitaev_energy_bounds(h.T, measured_error(c));
  Vec hist = history_state(c, {1});
  CHECK(expectation(h.all(), hist, h.n_total) <= b.alpha + 1e-12);
}

TEST_CASE("superposition proofs work too") {
  QuantumCircuit c = copy_verifier();
  Vec amps(2);
  amps << std::sqrt(0.25), std::sqrt(0.75);
  Vec hist = history_state(c, amps);
  KitaevHamiltonian h = compile_kitaev(c);
  CHECK(expectation(h.frustration_free_part(), hist, h.n_total) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // rejection probability 1/4 spread over T+1 slots
  CHECK(expectation(h.out, hist, h.n_total) ==
        doctest::Approx(0.25 / (h.T + 1)));
}

TEST_CASE("clock gap lower bound holds against dense diagonalization") {
  QuantumCircuit c = or_verifier();
  KitaevHamiltonian h = compile_kitaev(c);
  Mat ff = dense_from_terms(h.frustration_free_part(), h.n_total);
  std::vector<double> ev = hermitian_eigenvalues(ff);
  double gap = smallest_nonzero(ev, 1e-9);
  CHECK(gap >= clock_gap_bound(h.T));
  // one zero mode per proof setting: histories with clean ancillas
  int zeros = 0;
  for (double v : ev)
    if (v <= 1e-9) ++zeros;
  CHECK(zeros == (1 << c.layout.proof.size()));
}

TEST_CASE("history prep circuit prepares the history state for every proof") {
  QuantumCircuit c = decompose_to_2local(or_verifier());
  HistoryPrep hp = history_prep_circuit(c);
  CHECK(hp.cost_ratio <= history_prep_cost_bound());
  for (const Gate& g : hp.circuit.gates) CHECK(g.support.size() <= 2);
  for (std::uint64_t p = 0; p < 4; ++p) {
    std::vector<int> proof = {int(p >> 1), int(p & 1)};
    Vec want = history_state(c, proof);
    Vec got = simulate_statevector(hp.circuit, proof);
    CHECK((want - got).norm() < 1e-9);
  }
}

TEST_CASE("history prep keeps the proof register classical") {
  QuantumCircuit c = decompose_to_2local(copy_verifier());
  HistoryPrep hp = history_prep_circuit(c);
  // proof qubits appear only as controls (first slot of controlled blocks)
  for (const Gate& g : hp.circuit.gates) {
    Mat diff = g.block - Mat::Identity(g.block.rows(), g.block.cols());
    for (int s = 0; s < int(g.support.size()); ++s) {
      if (g.support[s] != 0) continue;
      // every block touching the proof qubit must be block-diagonal in it
      int cbit = int(g.support.size()) - 1 - s;
      for (int r = 0; r < g.block.rows(); ++r)
        for (int col = 0; col < g.block.cols(); ++col)
          if (((r >> cbit) & 1) != ((col >> cbit) & 1))
            CHECK(std::abs(g.block(r, col)) < 1e-12);
    }
    (void)diff;
  }
}
