#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gswb/linalg.hpp"
#include "gswb/qverify.hpp"

using namespace gswb;
using namespace gswb::testutil;

namespace {

std::vector<LocalTerm> random_terms(int width, int count,
                                    std::mt19937_64& rng) {
  std::vector<LocalTerm> terms;
  std::uniform_real_distribution<double> coeff(0.1, 1.0);
  for (int i = 0; i < count; ++i) {
    int k = 1 + int(rng() % 2);
    std::vector<int> support;
    while (int(support.size()) < k) {
      int q = int(rng() % width);
      if (std::find(support.begin(), support.end(), q) == support.end())
        support.push_back(q);
    }
    // PSD block with norm <= 1: projector onto a random subspace
    Mat u = random_unitary(1 << k, rng);
    Mat p = Mat::Zero(1 << k, 1 << k);
    int rank = 1 + int(rng() % (1 << k));
    for (int r = 0; r < rank; ++r) p += u.col(r) * u.col(r).adjoint();
    LocalTerm t;
    t.support = support;
    t.block = 0.5 * (p + p.adjoint());
    t.coeff = coeff(rng);
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

TEST_CASE("dense and iterative ground energies agree") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 5; ++t) {
    std::vector<LocalTerm> terms = random_terms(5, 6, rng);
    GroundEnergy dense = ground_energy(terms, 5);
    GroundEnergy iter = ground_energy(terms, 5, /*dense_limit=*/2, 100000,
                                      1e-9, 1234 + t);
    CHECK(dense.dense);
    CHECK_FALSE(iter.dense);
    CHECK(dense.value == doctest::Approx(iter.value).epsilon(1e-6));
  }
}

TEST_CASE("entanglement entropy of a Bell pair is one bit") {
  Vec bell = Vec::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  CHECK(entanglement_entropy(bell, 2, {0}) == doctest::Approx(1.0));
  std::vector<double> sc = schmidt_coefficients(bell, 2, {0});
  REQUIRE(sc.size() == 2);
  CHECK(sc[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  Vec prod = Vec::Zero(4);
  prod[2] = 1.0;
  CHECK(entanglement_entropy(prod, 2, {0}) == doctest::Approx(0.0));
  CHECK(schmidt_coefficients(prod, 2, {0}).size() == 1);
}

TEST_CASE("entropy is invariant under swapping the partition sides") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  Vec v(32);
  for (int i = 0; i < 32; ++i) v[i] = cplx(g(rng), g(rng));
  v.normalize();
  CHECK(entanglement_entropy(v, 5, {0, 2}) ==
        doctest::Approx(entanglement_entropy(v, 5, {1, 3, 4})));
}

TEST_CASE("reduced density and matrix entropy agree with the schmidt route") {
  std::mt19937_64 rng(47);
  std::normal_distribution<double> g;
  Vec v(16);
  for (int i = 0; i < 16; ++i) v[i] = cplx(g(rng), g(rng));
  v.normalize();
  Mat rho = reduced_density(v, 4, {1, 2});
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  CHECK(matrix_entropy(rho) ==
        doctest::Approx(entanglement_entropy(v, 4, {1, 2})));
}

TEST_CASE("trace distance and the entropy continuity bound") {
  Mat rho = Mat::Zero(2, 2), sigma = Mat::Zero(2, 2);
  rho(0, 0) = 1.0;
  sigma(0, 0) = sigma(1, 1) = 0.5;
  double t = trace_distance(rho, sigma);
  CHECK(t == doctest::Approx(0.5));
  double gap = std::abs(matrix_entropy(rho) - matrix_entropy(sigma));
  CHECK(gap <= entropy_continuity_bound(t, 2) + 1e-12);
  CHECK(entropy_continuity_bound(0.0, 8) == 0.0);
}

TEST_CASE("fannes-style bound holds for random qubit pairs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    Mat a = random_unitary(4, rng), b = random_unitary(4, rng);
    Mat rho = Mat::Zero(4, 4), sigma = Mat::Zero(4, 4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double pa = u(rng), pb = u(rng);
    rho = pa * a.col(0) * a.col(0).adjoint() +
          (1 - pa) * a.col(1) * a.col(1).adjoint();
    sigma = pb * b.col(0) * b.col(0).adjoint() +
            (1 - pb) * b.col(1) * b.col(1).adjoint();
    double t = trace_distance(rho, sigma);
    double gap = std::abs(matrix_entropy(rho) - matrix_entropy(sigma));
    CHECK(gap <= entropy_continuity_bound(t, 4) + 1e-9);
  }
}

TEST_CASE("traversal overlap bound") {
  CHECK(traversal_lower_bound(0.1, 4) == doctest::Approx(0.01));
  // A state fully inside S contributes overlap 0.
  Vec v = Vec::Zero(4);
  v[0] = 1.0;
  CHECK(traversal_max_overlap({v}, 2, {0}, {0}, {1}) ==
        doctest::Approx(0.0));
  // The uniform superposition leaks weight 0 (it is inside S union T on one
  // qubit patterns covering both values); use disjoint 2-bit patterns.
  Vec w = Vec::Constant(4, 0.5);
  CHECK(traversal_max_overlap({w}, 2, {0, 1}, {0, 0}, {1, 1}) ==
        doctest::Approx(0.5));
}

TEST_CASE("projection diagnostics on a constructed splitting") {
  // H1: big penalty off the |0> subspace of qubit 0; H2: small field.
  std::vector<LocalTerm> h1, h2;
  LocalTerm t1;
  t1.support = {0};
  t1.block = basis_projector({1});
  t1.coeff = 50.0;
  h1.push_back(t1);
  std::mt19937_64 rng(59);
  h2 = random_terms(3, 3, rng);
  ProjectionDiagnostics d = projection_diagnostics(h1, h2, 3, 1e-3);
  CHECK(d.J == doctest::Approx(50.0));
  CHECK(d.J > 2 * d.K);
  CHECK(d.sandwich_holds);
  CHECK(d.overlap_holds);
  CHECK(d.projected_energy_holds);
  CHECK(d.ok());
}

TEST_CASE("projection diagnostics enforces J > 2K") {
  std::vector<LocalTerm> h1, h2;
  LocalTerm t1;
  t1.support = {0};
  t1.block = basis_projector({1});
  h1.push_back(t1);
  LocalTerm t2 = t1;
  t2.support = {1};
  t2.coeff = 1.0;
  h2.push_back(t2);
  CHECK_THROWS_AS((void)projection_diagnostics(h1, h2, 2, 0.0), Error);
}
