#include "gswb/json_io.hpp"

#include <map>
#include <sstream>

namespace gswb {

namespace {

Json span_json(const Span& s) { return Json::array({s.lo, s.hi}); }

Span span_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::parse, "register span must be [lo, hi]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::parse, "matrix must be a nonempty array of rows");
  int n = int(j.size());
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || int(j[r].size()) != n)
      throw Error(ErrorCode::parse, "matrix must be square");
    for (int c = 0; c < n; ++c) {
      const Json& e = j[r][c];
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorCode::parse, "matrix entry must be [re, im]");
      m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json gates_json(const std::vector<Gate>& gates) {
  Json out = Json::array();
  for (const Gate& g : gates)
    out.push_back({{"support", g.support}, {"matrix", matrix_json(g.block)}});
  return out;
}

std::vector<Gate> gates_from_json(const Json& j) {
  std::vector<Gate> gates;
  for (const Json& g : j) {
    Gate gate;
    gate.support = g.at("support").get<std::vector<int>>();
    gate.block = matrix_from_json(g.at("matrix"));
    gates.push_back(std::move(gate));
  }
  return gates;
}

void require_type(const Json& j, const std::string& type) {
  if (j.value("type", "") != type)
    throw Error(ErrorCode::parse, "expected object of type " + type);
}

Json eta_json(double e1, double e2, double e3, double e4) {
  return Json::array({e1, e2, e3, e4});
}

}  // namespace

Json circuit_json(const QuantumCircuit& c) {
  return Json{{"type", "circuit"},
              {"width", c.width},
              {"registers",
               {{"B", span_json(c.layout.proof)},
                {"C", span_json(c.layout.ancilla)},
                {"output", c.layout.output}}},
              {"gates", gates_json(c.gates)}};
}

QuantumCircuit circuit_from_json(const Json& j) {
  require_type(j, "circuit");
  QuantumCircuit c;
  c.width = j.at("width").get<int>();
  const Json& r = j.at("registers");
  c.layout.proof = span_from_json(r.at("B"));
  c.layout.ancilla = span_from_json(r.at("C"));
  c.layout.output = r.at("output").get<int>();
  c.gates = gates_from_json(j.at("gates"));
  CircuitDiagnostics d = validate_circuit(c);
  if (!d.ok()) throw Error(ErrorCode::parse, "circuit: " + d.violations.front());
  return c;
}

namespace {

std::string kind_name(GateKind k) {
  switch (k) {
    case GateKind::NOT: return "not";
    case GateKind::AND: return "and";
    case GateKind::OR: return "or";
  }
  return "and";
}

GateKind kind_from_name(const std::string& s) {
  if (s == "not") return GateKind::NOT;
  if (s == "and") return GateKind::AND;
  if (s == "or") return GateKind::OR;
  throw Error(ErrorCode::parse, "unknown gate kind: " + s);
}

}  // namespace

Json monotone_json(const MonotoneCircuit& c) {
  Json gates = Json::array();
  for (const MonotoneGate& g : c.gates)
    gates.push_back(
        {{"kind", kind_name(g.kind)}, {"in", g.in}, {"out", g.out}});
  return Json{{"type", "monotone"},
              {"n", c.n_inputs},
              {"gates", std::move(gates)},
              {"output", c.output}};
}

MonotoneCircuit monotone_from_json(const Json& j) {
  require_type(j, "monotone");
  MonotoneCircuit c;
  c.n_inputs = j.at("n").get<int>();
  for (const Json& g : j.at("gates")) {
    MonotoneGate mg;
    mg.kind = kind_from_name(g.at("kind").get<std::string>());
    mg.in = g.at("in").get<std::vector<int>>();
    mg.out = g.at("out").get<int>();
    c.gates.push_back(std::move(mg));
  }
  c.output = j.at("output").get<int>();
  MonotoneDiagnostics d = validate_monotone(c);
  if (!d.ok()) throw Error(ErrorCode::parse, "circuit: " + d.violations.front());
  return c;
}

namespace {

Json terms_json(const std::vector<LocalTerm>& terms) {
  Json out = Json::array();
  for (const LocalTerm& t : terms)
    out.push_back({{"support", t.support},
                   {"coeff", t.coeff},
                   {"tag", tag_name(t.tag)},
                   {"matrix", matrix_json(t.block)}});
  return out;
}

}  // namespace

Json hamiltonian_json(const std::vector<LocalTerm>& terms, int width) {
  return Json{{"type", "hamiltonian"}, {"n", width}, {"terms", terms_json(terms)}};
}

std::vector<LocalTerm> terms_from_json(const Json& j) {
  std::vector<LocalTerm> terms;
  for (const Json& t : j) {
    LocalTerm lt;
    lt.support = t.at("support").get<std::vector<int>>();
    lt.coeff = t.value("coeff", 1.0);
    lt.tag = tag_from_name(t.value("tag", "amp"));
    lt.block = matrix_from_json(t.at("matrix"));
    terms.push_back(std::move(lt));
  }
  return terms;
}

Json gscon_json(const GsconInstance& inst) {
  const GsconRegisters& r = inst.reg;
  return Json{{"type", "gscon"},
              {"n", inst.width},
              {"terms", terms_json(inst.terms)},
              {"registers",
               {{"B", span_json(r.B)},
                {"C", span_json(r.C)},
                {"D", span_json(r.D)},
                {"E", span_json(r.E)},
                {"F", span_json(r.F)},
                {"G", span_json(r.G)},
                {"K", span_json(r.K)},
                {"L", span_json(r.L)},
                {"M", span_json(r.M)}}},
              {"start", bits_to_string(inst.start)},
              {"target", bits_to_string(inst.target)},
              {"m", inst.m},
              {"mprime", inst.m_prime},
              {"eta", eta_json(inst.eta1, inst.eta2, inst.eta3, inst.eta4)},
              {"mu", inst.mu},
              {"alpha", inst.alpha},
              {"beta", inst.beta},
              {"epsilon", inst.epsilon},
              {"g", inst.g},
              {"gprime", inst.g_prime},
              {"verifier", circuit_json(inst.verifier)},
              {"w", circuit_json(inst.w)}};
}

GsconInstance gscon_from_json(const Json& j) {
  require_type(j, "gscon");
  GsconInstance inst;
  inst.width = j.at("n").get<int>();
  inst.terms = terms_from_json(j.at("terms"));
  const Json& r = j.at("registers");
  inst.reg.B = span_from_json(r.at("B"));
  inst.reg.C = span_from_json(r.at("C"));
  inst.reg.D = span_from_json(r.at("D"));
  inst.reg.E = span_from_json(r.at("E"));
  inst.reg.F = span_from_json(r.at("F"));
  inst.reg.G = span_from_json(r.at("G"));
  inst.reg.K = span_from_json(r.at("K"));
  inst.reg.L = span_from_json(r.at("L"));
  inst.reg.M = span_from_json(r.at("M"));
  inst.start = string_to_bits(j.at("start").get<std::string>());
  inst.target = string_to_bits(j.at("target").get<std::string>());
  inst.m = j.at("m").get<long long>();
  inst.m_prime = j.at("mprime").get<long long>();
  const Json& eta = j.at("eta");
  inst.eta1 = eta.at(0).get<double>();
  inst.eta2 = eta.at(1).get<double>();
  inst.eta3 = eta.at(2).get<double>();
  inst.eta4 = eta.at(3).get<double>();
  inst.mu = j.at("mu").get<double>();
  inst.alpha = j.value("alpha", 0.0);
  inst.beta = j.value("beta", 0.0);
  inst.epsilon = j.value("epsilon", 0.0);
  inst.g = j.value("g", 0);
  inst.g_prime = j.value("gprime", 0);
  inst.verifier = circuit_from_json(j.at("verifier"));
  inst.w = circuit_from_json(j.at("w"));
  TermDiagnostics td = validate_terms(inst.terms, inst.width);
  if (!td.ok())
    throw Error(ErrorCode::parse, "terms: " + td.violations.front());
  return inst;
}

Json gse_json(const GseInstance& inst) {
  const GseRegisters& r = inst.reg;
  return Json{{"type", "gse"},
              {"n", inst.width},
              {"terms", terms_json(inst.terms)},
              {"registers",
               {{"B", span_json(r.B)},
                {"C", span_json(r.C)},
                {"E", span_json(r.E)},
                {"Ep", span_json(r.Ep)},
                {"F", span_json(r.F)},
                {"Fp", span_json(r.Fp)},
                {"D", span_json(r.D)}}},
              {"partition_A", inst.partition_A},
              {"Tprime", inst.T_prime},
              {"eta", eta_json(inst.eta1, inst.eta2, inst.eta3, inst.eta4)},
              {"mu", inst.mu},
              {"alpha", inst.alpha},
              {"beta", inst.beta},
              {"epsilon", inst.epsilon},
              {"g", inst.g},
              {"gprime", inst.g_prime},
              {"w", circuit_json(inst.w)}};
}

GseInstance gse_from_json(const Json& j) {
  require_type(j, "gse");
  GseInstance inst;
  inst.width = j.at("n").get<int>();
  inst.terms = terms_from_json(j.at("terms"));
  const Json& r = j.at("registers");
  inst.reg.B = span_from_json(r.at("B"));
  inst.reg.C = span_from_json(r.at("C"));
  inst.reg.E = span_from_json(r.at("E"));
  inst.reg.Ep = span_from_json(r.at("Ep"));
  inst.reg.F = span_from_json(r.at("F"));
  inst.reg.Fp = span_from_json(r.at("Fp"));
  inst.reg.D = span_from_json(r.at("D"));
  inst.partition_A = j.at("partition_A").get<std::vector<int>>();
  inst.T_prime = j.at("Tprime").get<int>();
  const Json& eta = j.at("eta");
  inst.eta1 = eta.at(0).get<double>();
  inst.eta2 = eta.at(1).get<double>();
  inst.eta3 = eta.at(2).get<double>();
  inst.eta4 = eta.at(3).get<double>();
  inst.mu = j.at("mu").get<double>();
  inst.alpha = j.value("alpha", 0.0);
  inst.beta = j.value("beta", 0.0);
  inst.epsilon = j.value("epsilon", 0.0);
  inst.g = j.value("g", 0);
  inst.g_prime = j.value("gprime", 0);
  inst.w = circuit_from_json(j.at("w"));
  TermDiagnostics td = validate_terms(inst.terms, inst.width);
  if (!td.ok())
    throw Error(ErrorCode::parse, "terms: " + td.violations.front());
  return inst;
}

Json path_json(int width, const std::vector<Gate>& gates) {
  return Json{{"type", "path"}, {"width", width}, {"gates", gates_json(gates)}};
}

std::vector<Gate> path_from_json(const Json& j, int* width) {
  require_type(j, "path");
  if (width) *width = j.at("width").get<int>();
  return gates_from_json(j.at("gates"));
}

Json flips_json(const std::vector<int>& flips) {
  return Json{{"type", "flips"}, {"flips", flips}};
}

std::vector<int> flips_from_json(const Json& j) {
  require_type(j, "flips");
  return j.at("flips").get<std::vector<int>>();
}

namespace {

const char* role_name(int idx, const BrRegisters& r) {
  if (r.y.contains(idx)) return "y";
  if (r.e.contains(idx)) return "e";
  if (r.f.contains(idx)) return "f";
  if (r.g.contains(idx)) return "g";
  if (r.k.contains(idx)) return "k";
  if (r.l.contains(idx)) return "l";
  return "a";
}

int role_offset(int idx, const BrRegisters& r) {
  for (const Span* s : {&r.y, &r.e, &r.f, &r.g, &r.k, &r.l, &r.a})
    if (s->contains(idx)) return idx - s->lo + 1;
  return 0;
}

}  // namespace

std::string br_to_dimacs(const BrInstance& inst) {
  std::ostringstream os;
  for (int v = 1; v <= inst.n_vars; ++v)
    os << "c role " << v << ' ' << role_name(v, inst.reg) << ' '
       << role_offset(v, inst.reg) << '\n';
  os << "c start " << bits_to_string(inst.start) << '\n';
  os << "c target " << bits_to_string(inst.target) << '\n';
  os << "c h " << inst.h << '\n';
  os << "c hprime " << inst.h_prime << '\n';
  os << "p cnf " << inst.n_vars << ' ' << inst.clauses.size() << '\n';
  for (const Clause& c : inst.clauses) {
    for (int lit : c) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

BrInstance br_from_dimacs(const std::string& text) {
  BrInstance inst;
  std::istringstream is(text);
  std::string line;
  struct RoleSpan {
    int lo = 0, hi = 0;
  };
  std::map<std::string, RoleSpan> roles;
  int n_clauses = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string kind;
      if (!(ls >> kind)) continue;
      if (kind == "role") {
        int var, idx;
        std::string role;
        if (!(ls >> var >> role >> idx))
          throw Error(ErrorCode::parse, "bad role comment");
        auto& s = roles[role];
        if (s.lo == 0 || var < s.lo) s.lo = var;
        if (var + 1 > s.hi) s.hi = var + 1;
      } else if (kind == "start" || kind == "target") {
        std::string bits;
        ls >> bits;
        (kind == "start" ? inst.start : inst.target) = string_to_bits(bits);
      } else if (kind == "h") {
        ls >> inst.h;
      } else if (kind == "hprime") {
        ls >> inst.h_prime;
      }
    } else if (head == "p") {
      std::string fmt;
      if (!(ls >> fmt >> inst.n_vars >> n_clauses) || fmt != "cnf")
        throw Error(ErrorCode::parse, "bad problem line");
    } else {
      std::istringstream cs(line);
      Clause c;
      int lit;
      while (cs >> lit && lit != 0) c.push_back(lit);
      if (!c.empty()) inst.clauses.push_back(std::move(c));
    }
  }
  if (n_clauses < 0) throw Error(ErrorCode::parse, "missing problem line");
  if (int(inst.clauses.size()) != n_clauses)
    throw Error(ErrorCode::parse, "clause count mismatch");
  for (const Clause& c : inst.clauses)
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > inst.n_vars)
        throw Error(ErrorCode::parse, "literal out of range");
  // plain DIMACS (no endpoint comments) defaults to the all-zero assignment
  if (inst.start.empty()) inst.start.assign(inst.n_vars, 0);
  if (inst.target.empty()) inst.target.assign(inst.n_vars, 0);
  if (int(inst.start.size()) != inst.n_vars ||
      int(inst.target.size()) != inst.n_vars)
    throw Error(ErrorCode::parse, "start/target length mismatch");
  auto span_of = [&roles](const std::string& r) {
    auto it = roles.find(r);
    return it == roles.end() ? Span{0, 0} : Span{it->second.lo, it->second.hi};
  };
  inst.reg.y = span_of("y");
  inst.reg.e = span_of("e");
  inst.reg.f = span_of("f");
  inst.reg.g = span_of("g");
  inst.reg.k = span_of("k");
  inst.reg.l = span_of("l");
  inst.reg.a = span_of("a");
  inst.n_inputs = inst.reg.f.size();
  inst.n_gates = inst.reg.y.size() - inst.n_inputs;
  return inst;
}

std::size_t serialized_constraint_bytes(const std::vector<LocalTerm>& terms,
                                        int width) {
  return hamiltonian_json(terms, width).dump().size();
}

std::size_t serialized_constraint_bytes(const BrInstance& inst) {
  std::ostringstream os;
  os << "p cnf " << inst.n_vars << ' ' << inst.clauses.size() << '\n';
  for (const Clause& c : inst.clauses) {
    for (int lit : c) os << lit << ' ';
    os << "0\n";
  }
  return os.str().size();
}

AnyObject parse_text(const std::string& text) {
  AnyObject obj;
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw Error(ErrorCode::parse, "empty input");
  if (text[i] == 'c' || text[i] == 'p') {
    obj.type = "br";
    obj.br = br_from_dimacs(text);
    return obj;
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::parse, std::string("json: ") + e.what());
  }
  obj.type = j.value("type", "");
  if (obj.type == "circuit") {
    obj.circuit = circuit_from_json(j);
  } else if (obj.type == "monotone") {
    obj.monotone = monotone_from_json(j);
  } else if (obj.type == "hamiltonian") {
    obj.width = j.at("n").get<int>();
    obj.terms = terms_from_json(j.at("terms"));
    TermDiagnostics td = validate_terms(obj.terms, obj.width);
    if (!td.ok())
      throw Error(ErrorCode::parse, "terms: " + td.violations.front());
  } else if (obj.type == "gscon") {
    obj.gscon = gscon_from_json(j);
  } else if (obj.type == "gse") {
    obj.gse = gse_from_json(j);
  } else if (obj.type == "path") {
    obj.path = path_from_json(j, &obj.width);
  } else if (obj.type == "flips") {
    obj.flips = flips_from_json(j);
  } else {
    throw Error(ErrorCode::parse, "unknown object type: " + obj.type);
  }
  return obj;
}

std::string serialize(const AnyObject& obj) {
  if (obj.type == "circuit") return circuit_json(obj.circuit).dump(2) + "\n";
  if (obj.type == "monotone") return monotone_json(obj.monotone).dump(2) + "\n";
  if (obj.type == "hamiltonian")
    return hamiltonian_json(obj.terms, obj.width).dump(2) + "\n";
  if (obj.type == "gscon") return gscon_json(obj.gscon).dump(2) + "\n";
  if (obj.type == "gse") return gse_json(obj.gse).dump(2) + "\n";
  if (obj.type == "path") return path_json(obj.width, obj.path).dump(2) + "\n";
  if (obj.type == "flips") return flips_json(obj.flips).dump(2) + "\n";
  if (obj.type == "br") return br_to_dimacs(obj.br);
  throw Error(ErrorCode::invalid_argument, "unknown object type: " + obj.type);
}

}  // namespace gswb
