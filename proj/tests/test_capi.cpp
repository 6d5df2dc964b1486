// Exercises the shared-library interface only: everything goes through the
// C header, opaque handles and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "gswb.h"

namespace {

// single-CNOT verifier: accepts iff the proof bit is 1
const char* kCircuitJson = R"({
  "type": "circuit",
  "width": 2,
  "registers": {"B": [0, 1], "C": [1, 2], "output": 1},
  "gates": [{
    "support": [0, 1],
    "matrix": [[[1,0],[0,0],[0,0],[0,0]],
               [[0,0],[1,0],[0,0],[0,0]],
               [[0,0],[0,0],[0,0],[1,0]],
               [[0,0],[0,0],[1,0],[0,0]]]
  }]
})";

const char* kMonotoneJson = R"({
  "type": "monotone",
  "n": 2,
  "gates": [{"kind": "or", "in": [0, 1], "out": 2}],
  "output": 2
})";

struct Handle {
  gswb_object* obj = nullptr;
  ~Handle() { gswb_object_free(obj); }
};

struct Text {
  char* s = nullptr;
  ~Text() { gswb_string_free(s); }
  bool has(const char* needle) const {
    return s && std::strstr(s, needle) != nullptr;
  }
};

}  // namespace

TEST_CASE("parse, type, serialize and reparse") {
  Handle c;
  REQUIRE(gswb_parse(kCircuitJson, &c.obj) == GSWB_OK);
  CHECK(std::string(gswb_object_type(c.obj)) == "circuit");
  Text out;
  REQUIRE(gswb_serialize(c.obj, &out.s) == GSWB_OK);
  Handle again;
  CHECK(gswb_parse(out.s, &again.obj) == GSWB_OK);
  CHECK(std::string(gswb_object_type(again.obj)) == "circuit");
}

TEST_CASE("error paths set a status and a message") {
  gswb_object* out = nullptr;
  CHECK(gswb_parse(nullptr, &out) == GSWB_ERR_INVALID_ARGUMENT);
  CHECK(gswb_parse("{\"type\": \"mystery\"}", &out) == GSWB_ERR_PARSE);
  CHECK(std::strlen(gswb_last_error()) > 0);
  Handle c;
  REQUIRE(gswb_parse(kCircuitJson, &c.obj) == GSWB_OK);
  // wrong object kind
  double e = 0;
  CHECK(gswb_entropy(c.obj, "1", &e) == GSWB_ERR_INVALID_ARGUMENT);
  CHECK(gswb_ground_energy(c.obj, 0, &e) == GSWB_ERR_INVALID_ARGUMENT);
  gswb_object_free(nullptr);  // must be a no-op
  gswb_string_free(nullptr);
}

TEST_CASE("clock compiler through the C surface") {
  Handle c, kit;
  REQUIRE(gswb_parse(kCircuitJson, &c.obj) == GSWB_OK);
  REQUIRE(gswb_compile_kitaev(c.obj, &kit.obj) == GSWB_OK);
  CHECK(std::string(gswb_object_type(kit.obj)) == "hamiltonian");
  double e0 = 1.0;
  REQUIRE(gswb_ground_energy(kit.obj, 0, &e0) == GSWB_OK);
  CHECK(e0 < 1e-9);   // accepted proof exists
  CHECK(e0 > -1e-9);  // all terms positive semidefinite
  Text report;
  REQUIRE(gswb_report(kit.obj, &report.s) == GSWB_OK);
  CHECK(report.has("serialized_bytes"));
}

TEST_CASE("traversal instance end to end") {
  Handle c, inst, path;
  REQUIRE(gswb_parse(kCircuitJson, &c.obj) == GSWB_OK);
  REQUIRE(gswb_compile_gscon(c.obj, 1, 1, 1, &inst.obj) == GSWB_OK);
  CHECK(std::string(gswb_object_type(inst.obj)) == "gscon");
  REQUIRE(gswb_honest_path(inst.obj, "1", &path.obj) == GSWB_OK);
  Text verdict;
  REQUIRE(gswb_verify_path(inst.obj, path.obj, &verdict.s) == GSWB_OK);
  CHECK(verdict.has("\"ok\": true"));
  // a rejected proof's walk fails verification but not the call itself
  Handle bad;
  REQUIRE(gswb_honest_path(inst.obj, "0", &bad.obj) == GSWB_OK);
  Text bad_verdict;
  REQUIRE(gswb_verify_path(inst.obj, bad.obj, &bad_verdict.s) == GSWB_OK);
  CHECK(bad_verdict.has("\"ok\": false"));
  // paths serialize and round trip
  Text path_text;
  REQUIRE(gswb_serialize(path.obj, &path_text.s) == GSWB_OK);
  Handle path_again;
  REQUIRE(gswb_parse(path_text.s, &path_again.obj) == GSWB_OK);
  Text verdict2;
  REQUIRE(gswb_verify_path(inst.obj, path_again.obj, &verdict2.s) == GSWB_OK);
  CHECK(verdict2.has("\"ok\": true"));
  // move-counting walk oracle
  Text bound;
  REQUIRE(gswb_xflip_bound(inst.obj, -1, 0, &bound.s) == GSWB_OK);
  CHECK(bound.has("\"found\": true"));
  Text report;
  REQUIRE(gswb_report(inst.obj, &report.s) == GSWB_OK);
  CHECK(report.has("\"mprime\""));
  CHECK(report.has("eta4_over_eta3\": null"));
}

TEST_CASE("entanglement instance entropy") {
  Handle c, inst;
  REQUIRE(gswb_parse(kCircuitJson, &c.obj) == GSWB_OK);
  REQUIRE(gswb_compile_gse(c.obj, 1, 1, &inst.obj) == GSWB_OK);
  double s = -1;
  REQUIRE(gswb_entropy(inst.obj, "1", &s) == GSWB_OK);
  CHECK(s > 0.25);
  double s0 = -1;
  REQUIRE(gswb_entropy(inst.obj, "0", &s0) == GSWB_OK);
  CHECK(s0 < s);
  CHECK(gswb_entropy(inst.obj, nullptr, &s) == GSWB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reconfiguration formula end to end") {
  Handle mc, inst, flips;
  REQUIRE(gswb_parse(kMonotoneJson, &mc.obj) == GSWB_OK);
  REQUIRE(gswb_compile_br(mc.obj, 1, 2, 0, &inst.obj) == GSWB_OK);
  CHECK(std::string(gswb_object_type(inst.obj)) == "br");
  // DIMACS round trip
  Text dimacs;
  REQUIRE(gswb_serialize(inst.obj, &dimacs.s) == GSWB_OK);
  CHECK(dimacs.has("p cnf"));
  Handle inst_again;
  REQUIRE(gswb_parse(dimacs.s, &inst_again.obj) == GSWB_OK);
  REQUIRE(gswb_honest_flips(mc.obj, 1, 2, "10", &flips.obj) == GSWB_OK);
  Text verdict;
  REQUIRE(gswb_verify_path(inst_again.obj, flips.obj, &verdict.s) == GSWB_OK);
  CHECK(verdict.has("\"ok\": true"));
  Text bfs;
  REQUIRE(gswb_bfs(inst.obj, 0, &bfs.s) == GSWB_OK);
  CHECK(bfs.has("\"found\": true"));
  Text report;
  REQUIRE(gswb_report(inst.obj, &report.s) == GSWB_OK);
  CHECK(report.has("\"hprime\": 6"));
  // rejected input: honest walk construction fails with a precondition
  Handle none;
  CHECK(gswb_honest_flips(mc.obj, 1, 2, "00", &none.obj) ==
        GSWB_ERR_PRECONDITION);
}
