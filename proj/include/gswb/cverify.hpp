#pragma once

#include "gswb/br.hpp"
#include "gswb/gscon.hpp"

namespace gswb {

struct BfsResult {
  bool found = false;
  long long distance = -1;
  std::vector<int> path;          // flipped variables (1-based), in order
  std::uint64_t nodes_expanded = 0;
};

// Shortest single-flip walk between two satisfying assignments, staying
// satisfying at every step. Throws resource_limit past node_budget or when
// the formula has more than 64 variables.
BfsResult bfs_shortest_path(const BrInstance& inst,
                            std::uint64_t node_budget = 10000000);

struct XFlipResult {
  bool found = false;
  long long gate_count = -1;   // X / XX moves on the shortest path
  long long flip_count = -1;   // single-bit flips on that path
  std::uint64_t nodes_expanded = 0;
};

// Shortest sequence of X / XX moves over computational basis states that
// keeps the structure terms of a traversal instance at zero energy, from the
// all-zeros start to any state with proof weight >= min_b_weight and a full
// move counter. The verifier registers C, D and the GO flag stay at zero.
// min_b_weight < 0 uses the instance's g'.
XFlipResult xflip_lower_bound(const GsconInstance& inst, int min_b_weight = -1,
                              bool require_full_counter = true,
                              std::uint64_t node_budget = 10000000);

}  // namespace gswb
