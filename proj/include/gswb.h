/* C interface to the reduction workbench core. All functions return a status
 * code; on failure gswb_last_error() describes the problem. Objects and
 * strings returned through out-parameters are owned by the caller and must be
 * released with gswb_object_free / gswb_string_free. */
#ifndef GSWB_H
#define GSWB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gswb_object gswb_object;

typedef enum {
  GSWB_OK = 0,
  GSWB_ERR_INVALID_ARGUMENT = 1,
  GSWB_ERR_PARSE = 2,
  GSWB_ERR_RESOURCE_LIMIT = 3,
  GSWB_ERR_PRECONDITION = 4,
  GSWB_ERR_NONCONVERGENCE = 5,
  GSWB_ERR_DEGENERATE = 6,
  GSWB_ERR_DIMENSION = 7,
  GSWB_ERR_INTERNAL = 8
} gswb_status;

/* Message of the most recent failure on this thread. */
const char* gswb_last_error(void);

/* Parse JSON (circuits, Hamiltonians, instances, paths) or DIMACS
 * (reconfiguration formulas); the format is autodetected. */
gswb_status gswb_parse(const char* text, gswb_object** out);
void gswb_object_free(gswb_object* obj);
gswb_status gswb_serialize(const gswb_object* obj, char** out_text);
void gswb_string_free(char* text);
/* "circuit" | "monotone" | "hamiltonian" | "gscon" | "gse" | "path" |
 * "flips" | "br" */
const char* gswb_object_type(const gswb_object* obj);

/* Clock Hamiltonian of a verification circuit. */
gswb_status gswb_compile_kitaev(const gswb_object* circuit, gswb_object** out);
/* Traversal instance; repetitions > 1 amplifies the verifier first. */
gswb_status gswb_compile_gscon(const gswb_object* circuit, int g, int gprime,
                               int repetitions, gswb_object** out);
/* Entanglement-witness instance. */
gswb_status gswb_compile_gse(const gswb_object* circuit, int g, int gprime,
                             gswb_object** out);
/* Reconfiguration formula for a monotone circuit; printed_or selects the
 * uncorrected OR gadget variant. */
gswb_status gswb_compile_br(const gswb_object* monotone, int g, int gprime,
                            int printed_or, gswb_object** out);

/* Zero-energy unitary walk for an accepted proof (traversal instance). */
gswb_status gswb_honest_path(const gswb_object* gscon, const char* proof_bits,
                             gswb_object** out);
/* Satisfying flip walk for an accepted input (monotone circuit + thresholds). */
gswb_status gswb_honest_flips(const gswb_object* monotone, int g, int gprime,
                              const char* input_bits, gswb_object** out);

/* Verdict JSON for (gscon, path) or (br, flips). */
gswb_status gswb_verify_path(const gswb_object* inst, const gswb_object* path,
                             char** verdict_json);
/* Smallest eigenvalue of a hamiltonian / gscon / gse object.
 * dense_limit <= 0 uses the built-in cap. */
gswb_status gswb_ground_energy(const gswb_object* obj, int dense_limit,
                               double* out);
/* Entanglement entropy (bits) of the instance's history state across its
 * designated partition, for a basis proof. */
gswb_status gswb_entropy(const gswb_object* gse, const char* proof_bits,
                         double* out);
/* Shortest satisfying flip walk of a reconfiguration formula. */
gswb_status gswb_bfs(const gswb_object* br, unsigned long long node_budget,
                     char** verdict_json);
/* Shortest zero-energy X/XX walk reaching proof weight >= min_b_weight with a
 * full move counter; min_b_weight < 0 uses the instance's g'. */
gswb_status gswb_xflip_bound(const gswb_object* gscon, int min_b_weight,
                             unsigned long long node_budget,
                             char** verdict_json);
/* Size and soundness-parameter summary of any object. */
gswb_status gswb_report(const gswb_object* obj, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* GSWB_H */
