#pragma once

#include "gswb/br.hpp"
#include "gswb/gscon.hpp"
#include "gswb/gse.hpp"

// vendored single-header json
#include "json.hpp"

namespace gswb {

using Json = nlohmann::json;

Json circuit_json(const QuantumCircuit& c);
QuantumCircuit circuit_from_json(const Json& j);

Json monotone_json(const MonotoneCircuit& c);
MonotoneCircuit monotone_from_json(const Json& j);

Json hamiltonian_json(const std::vector<LocalTerm>& terms, int width);
std::vector<LocalTerm> terms_from_json(const Json& j);

Json gscon_json(const GsconInstance& inst);
GsconInstance gscon_from_json(const Json& j);

Json gse_json(const GseInstance& inst);
GseInstance gse_from_json(const Json& j);

Json path_json(int width, const std::vector<Gate>& gates);
std::vector<Gate> path_from_json(const Json& j, int* width = nullptr);

Json flips_json(const std::vector<int>& flips);
std::vector<int> flips_from_json(const Json& j);

std::string br_to_dimacs(const BrInstance& inst);
BrInstance br_from_dimacs(const std::string& text);

// Byte size of the canonical (compact JSON / DIMACS) constraint encoding.
std::size_t serialized_constraint_bytes(const std::vector<LocalTerm>& terms,
                                        int width);
std::size_t serialized_constraint_bytes(const BrInstance& inst);

// Tagged container for any workbench object, with format autodetection
// (DIMACS when the text starts with 'c' or 'p', JSON otherwise).
struct AnyObject {
  std::string type;  // circuit | monotone | hamiltonian | gscon | gse | path | flips | br
  QuantumCircuit circuit;
  MonotoneCircuit monotone;
  std::vector<LocalTerm> terms;
  int width = 0;
  GsconInstance gscon;
  GseInstance gse;
  std::vector<Gate> path;
  std::vector<int> flips;
  BrInstance br;
};
AnyObject parse_text(const std::string& text);
std::string serialize(const AnyObject& obj);

}  // namespace gswb
