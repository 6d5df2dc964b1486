#include "gswb.h"

#include <cstring>

#include "gswb/cverify.hpp"
#include "gswb/json_io.hpp"
#include "gswb/kitaev.hpp"
#include "gswb/qverify.hpp"

struct gswb_object {
  gswb::AnyObject obj;
};

namespace {

thread_local std::string g_last_error;

gswb_status status_of(gswb::ErrorCode c) {
  using gswb::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return GSWB_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return GSWB_ERR_PARSE;
    case ErrorCode::resource_limit: return GSWB_ERR_RESOURCE_LIMIT;
    case ErrorCode::precondition: return GSWB_ERR_PRECONDITION;
    case ErrorCode::nonconvergence: return GSWB_ERR_NONCONVERGENCE;
    case ErrorCode::degenerate_instance: return GSWB_ERR_DEGENERATE;
    case ErrorCode::dimension_mismatch: return GSWB_ERR_DIMENSION;
  }
  return GSWB_ERR_INTERNAL;
}

template <typename F>
gswb_status guarded(F&& f) {
  try {
    f();
    return GSWB_OK;
  } catch (const gswb::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GSWB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const gswb::AnyObject& deref(const gswb_object* o, const char* what) {
  if (!o) throw gswb::Error(gswb::ErrorCode::invalid_argument,
                            std::string("null ") + what);
  return o->obj;
}

const gswb::QuantumCircuit& as_circuit(const gswb_object* o) {
  const gswb::AnyObject& a = deref(o, "circuit");
  if (a.type != "circuit")
    throw gswb::Error(gswb::ErrorCode::invalid_argument,
                      "expected a circuit object, got " + a.type);
  return a.circuit;
}

}  // namespace

extern "C" {

const char* gswb_last_error(void) { return g_last_error.c_str(); }

gswb_status gswb_parse(const char* text, gswb_object** out) {
  return guarded([&] {
    if (!text || !out)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null argument");
    auto* o = new gswb_object{gswb::parse_text(text)};
    *out = o;
  });
}

void gswb_object_free(gswb_object* obj) { delete obj; }

gswb_status gswb_serialize(const gswb_object* obj, char** out_text) {
  return guarded([&] {
    if (!out_text)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null out_text");
    *out_text = dup_string(gswb::serialize(deref(obj, "object")));
  });
}

void gswb_string_free(char* text) { delete[] text; }

const char* gswb_object_type(const gswb_object* obj) {
  return obj ? obj->obj.type.c_str() : "";
}

gswb_status gswb_compile_kitaev(const gswb_object* circuit, gswb_object** out) {
  return guarded([&] {
    gswb::KitaevHamiltonian kit = gswb::compile_kitaev(as_circuit(circuit));
    auto* o = new gswb_object;
    o->obj.type = "hamiltonian";
    o->obj.width = kit.n_total;
    o->obj.terms = kit.all();
    *out = o;
  });
}

gswb_status gswb_compile_gscon(const gswb_object* circuit, int g, int gprime,
                               int repetitions, gswb_object** out) {
  return guarded([&] {
    gswb::QmsaInstance q;
    q.circuit = as_circuit(circuit);
    q.g = g;
    q.g_prime = gprime;
    q.repetitions = repetitions < 1 ? 1 : repetitions;
    auto* o = new gswb_object;
    o->obj.type = "gscon";
    o->obj.gscon = gswb::compile_gscon(q);
    *out = o;
  });
}

gswb_status gswb_compile_gse(const gswb_object* circuit, int g, int gprime,
                             gswb_object** out) {
  return guarded([&] {
    gswb::QmsaInstance q;
    q.circuit = as_circuit(circuit);
    q.g = g;
    q.g_prime = gprime;
    auto* o = new gswb_object;
    o->obj.type = "gse";
    o->obj.gse = gswb::compile_gse(q);
    *out = o;
  });
}

gswb_status gswb_compile_br(const gswb_object* monotone, int g, int gprime,
                            int printed_or, gswb_object** out) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(monotone, "circuit");
    if (a.type != "monotone")
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected a monotone circuit, got " + a.type);
    gswb::MmsaInstance m{a.monotone, g, gprime};
    auto* o = new gswb_object;
    o->obj.type = "br";
    o->obj.br = gswb::compile_br(m, printed_or != 0);
    *out = o;
  });
}

gswb_status gswb_honest_path(const gswb_object* gscon, const char* proof_bits,
                             gswb_object** out) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(gscon, "instance");
    if (a.type != "gscon")
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected a gscon instance, got " + a.type);
    if (!proof_bits)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null proof");
    auto* o = new gswb_object;
    o->obj.type = "path";
    o->obj.width = a.gscon.width;
    o->obj.path =
        gswb::honest_gscon_path(a.gscon, gswb::string_to_bits(proof_bits));
    *out = o;
  });
}

gswb_status gswb_honest_flips(const gswb_object* monotone, int g, int gprime,
                              const char* input_bits, gswb_object** out) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(monotone, "circuit");
    if (a.type != "monotone")
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected a monotone circuit, got " + a.type);
    if (!input_bits)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null input");
    gswb::BrInstance br = gswb::compile_br({a.monotone, g, gprime});
    auto* o = new gswb_object;
    o->obj.type = "flips";
    o->obj.flips =
        gswb::honest_br_path(br, gswb::string_to_bits(input_bits)).flips;
    *out = o;
  });
}

gswb_status gswb_verify_path(const gswb_object* inst, const gswb_object* path,
                             char** verdict_json) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(inst, "instance");
    const gswb::AnyObject& p = deref(path, "path");
    gswb::Json j;
    if (a.type == "gscon" && p.type == "path") {
      gswb::PathVerdict v = gswb::verify_gscon_path(a.gscon, p.path);
      j = {{"ok", v.ok},
           {"length", v.length},
           {"max_energy", v.max_energy},
           {"final_distance", v.final_distance},
           {"violations", v.violations}};
    } else if (a.type == "br" && p.type == "flips") {
      gswb::BrVerdict v = gswb::validate_br_path(a.br, p.flips);
      j = {{"ok", v.ok},
           {"length", v.length},
           {"violations", v.violations}};
    } else {
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected (gscon, path) or (br, flips), got (" +
                            a.type + ", " + p.type + ")");
    }
    *verdict_json = dup_string(j.dump(2) + "\n");
  });
}

gswb_status gswb_ground_energy(const gswb_object* obj, int dense_limit,
                               double* out) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(obj, "object");
    if (!out)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null out");
    int limit = dense_limit > 0 ? dense_limit : gswb::kDefaultDenseLimit;
    const std::vector<gswb::LocalTerm>* terms = nullptr;
    int width = 0;
    if (a.type == "hamiltonian") {
      terms = &a.terms;
      width = a.width;
    } else if (a.type == "gscon") {
      terms = &a.gscon.terms;
      width = a.gscon.width;
    } else if (a.type == "gse") {
      terms = &a.gse.terms;
      width = a.gse.width;
    } else {
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "object has no Hamiltonian: " + a.type);
    }
    *out = gswb::ground_energy(*terms, width, limit).value;
  });
}

gswb_status gswb_entropy(const gswb_object* gse, const char* proof_bits,
                         double* out) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(gse, "instance");
    if (a.type != "gse")
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected a gse instance, got " + a.type);
    if (!proof_bits || !out)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null argument");
    gswb::Vec h =
        gswb::gse_history_state(a.gse, gswb::string_to_bits(proof_bits));
    *out = gswb::entanglement_entropy(h, a.gse.width, a.gse.partition_A);
  });
}

gswb_status gswb_bfs(const gswb_object* br, unsigned long long node_budget,
                     char** verdict_json) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(br, "formula");
    if (a.type != "br")
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected a reconfiguration formula, got " + a.type);
    gswb::BfsResult r = gswb::bfs_shortest_path(
        a.br, node_budget ? node_budget : 10000000ULL);
    gswb::Json j = {{"found", r.found},
                    {"distance", r.distance},
                    {"nodes_expanded", r.nodes_expanded},
                    {"path", r.path}};
    *verdict_json = dup_string(j.dump(2) + "\n");
  });
}

gswb_status gswb_xflip_bound(const gswb_object* gscon, int min_b_weight,
                             unsigned long long node_budget,
                             char** verdict_json) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(gscon, "instance");
    if (a.type != "gscon")
      throw gswb::Error(gswb::ErrorCode::invalid_argument,
                        "expected a gscon instance, got " + a.type);
    gswb::XFlipResult r = gswb::xflip_lower_bound(
        a.gscon, min_b_weight, true, node_budget ? node_budget : 10000000ULL);
    gswb::Json j = {{"found", r.found},
                    {"gate_count", r.gate_count},
                    {"flip_count", r.flip_count},
                    {"nodes_expanded", r.nodes_expanded}};
    *verdict_json = dup_string(j.dump(2) + "\n");
  });
}

gswb_status gswb_report(const gswb_object* obj, char** report_json) {
  return guarded([&] {
    const gswb::AnyObject& a = deref(obj, "object");
    if (!report_json)
      throw gswb::Error(gswb::ErrorCode::invalid_argument, "null out");
    gswb::Json j{{"type", a.type}};
    if (a.type == "circuit") {
      j["width"] = a.circuit.width;
      j["gates"] = a.circuit.gates.size();
    } else if (a.type == "monotone") {
      j["inputs"] = a.monotone.n_inputs;
      j["gates"] = a.monotone.gates.size();
    } else if (a.type == "hamiltonian") {
      j["n"] = a.width;
      j["terms"] = a.terms.size();
      j["serialized_bytes"] = gswb::serialized_constraint_bytes(a.terms, a.width);
    } else if (a.type == "gscon") {
      const gswb::GsconInstance& g = a.gscon;
      j["n"] = g.width;
      j["terms"] = g.terms.size();
      j["serialized_bytes"] =
          gswb::serialized_constraint_bytes(g.terms, g.width);
      j["m"] = g.m;
      j["mprime"] = g.m_prime;
      j["mprime_over_m"] = double(g.m_prime) / double(g.m);
      j["eta"] = gswb::Json::array({g.eta1, g.eta2, g.eta3, g.eta4});
      j["eta4_minus_eta3"] = g.eta4 - g.eta3;
      if (g.eta3 != 0.0)
        j["eta4_over_eta3"] = g.eta4 / g.eta3;
      else
        j["eta4_over_eta3"] = nullptr;
      j["mu"] = g.mu;
      j["alpha"] = g.alpha;
      j["beta"] = g.beta;
      j["epsilon"] = g.epsilon;
    } else if (a.type == "gse") {
      const gswb::GseInstance& g = a.gse;
      j["n"] = g.width;
      j["terms"] = g.terms.size();
      j["serialized_bytes"] =
          gswb::serialized_constraint_bytes(g.terms, g.width);
      j["Tprime"] = g.T_prime;
      j["eta"] = gswb::Json::array({g.eta1, g.eta2, g.eta3, g.eta4});
      j["eta4_minus_eta3"] = g.eta4 - g.eta3;
      if (g.eta3 != 0.0)
        j["eta4_over_eta3"] = g.eta4 / g.eta3;
      else
        j["eta4_over_eta3"] = nullptr;
      j["mu"] = g.mu;
      j["alpha"] = g.alpha;
      j["beta"] = g.beta;
      j["epsilon"] = g.epsilon;
    } else if (a.type == "br") {
      const gswb::BrInstance& b = a.br;
      j["vars"] = b.n_vars;
      j["clauses"] = b.clauses.size();
      j["serialized_bytes"] = gswb::serialized_constraint_bytes(b);
      j["h"] = b.h;
      j["hprime"] = b.h_prime;
      j["hprime_over_h"] = b.h > 0 ? double(b.h_prime) / double(b.h) : 0.0;
    } else if (a.type == "path") {
      j["width"] = a.width;
      j["length"] = a.path.size();
    } else if (a.type == "flips") {
      j["length"] = a.flips.size();
    }
    *report_json = dup_string(j.dump(2) + "\n");
  });
}

}  // extern "C"
