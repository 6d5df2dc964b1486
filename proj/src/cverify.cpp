#include "gswb/cverify.hpp"

#include <deque>
#include <unordered_map>

namespace gswb {

namespace {

struct MaskClause {
  std::uint64_t pos = 0, neg = 0;
};

bool satisfies(const std::vector<MaskClause>& cls, std::uint64_t a) {
  for (const MaskClause& c : cls)
    if ((a & c.pos) == 0 && (~a & c.neg) == 0) return false;
  return true;
}

}  // namespace

BfsResult bfs_shortest_path(const BrInstance& inst, std::uint64_t node_budget) {
  if (inst.n_vars > 64)
    throw Error(ErrorCode::resource_limit, "walk search capped at 64 variables");
  std::vector<MaskClause> cls;
  for (const Clause& c : inst.clauses) {
    MaskClause m;
    for (int lit : c) {
      std::uint64_t bit = std::uint64_t(1) << (std::abs(lit) - 1);
      (lit > 0 ? m.pos : m.neg) |= bit;
    }
    cls.push_back(m);
  }
  auto pack = [](const std::vector<int>& a) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) v |= std::uint64_t(1) << i;
    return v;
  };
  std::uint64_t start = pack(inst.start), target = pack(inst.target);
  BfsResult r;
  if (!satisfies(cls, start) || !satisfies(cls, target)) return r;
  // parent map: state -> (previous state, flipped variable)
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> seen;
  seen.emplace(start, std::make_pair(start, 0));
  std::deque<std::pair<std::uint64_t, long long>> frontier{{start, 0}};
  while (!frontier.empty()) {
    auto [cur, dist] = frontier.front();
    frontier.pop_front();
    if (++r.nodes_expanded > node_budget)
      throw Error(ErrorCode::resource_limit, "walk search budget exhausted");
    if (cur == target) {
      r.found = true;
      r.distance = dist;
      for (std::uint64_t s = cur; s != start;) {
        auto& [prev, var] = seen.at(s);
        r.path.push_back(var);
        s = prev;
      }
      std::reverse(r.path.begin(), r.path.end());
      return r;
    }
    for (int v = 1; v <= inst.n_vars; ++v) {
      std::uint64_t next = cur ^ (std::uint64_t(1) << (v - 1));
      if (seen.count(next) || !satisfies(cls, next)) continue;
      seen.emplace(next, std::make_pair(cur, v));
      frontier.emplace_back(next, dist + 1);
    }
  }
  return r;
}

XFlipResult xflip_lower_bound(const GsconInstance& inst, int min_b_weight,
                              bool require_full_counter,
                              std::uint64_t node_budget) {
  const GsconRegisters& r = inst.reg;
  std::vector<int> free_bits;
  for (const Span* s : {&r.B, &r.F, &r.G, &r.K, &r.L, &r.M})
    for (int q = s->lo; q < s->hi; ++q) free_bits.push_back(q);
  int nb = int(free_bits.size());
  if (nb > 64)
    throw Error(ErrorCode::resource_limit, "flip search capped at 64 bits");
  int n = r.B.size();
  if (min_b_weight < 0) min_b_weight = inst.g_prime;
  std::vector<LocalTerm> terms = inst.structure_terms();

  std::vector<int> bits(inst.width, 0);
  auto unpack = [&](std::uint64_t key) {
    for (int i = 0; i < nb; ++i) bits[free_bits[i]] = int((key >> i) & 1);
  };
  auto feasible = [&](std::uint64_t key) {
    unpack(key);
    return std::abs(diagonal_energy(terms, bits)) < 1e-12;
  };
  auto is_target = [&](std::uint64_t key) {
    unpack(key);
    int w = 0;
    for (int q = r.B.lo; q < r.B.hi; ++q) w += bits[q];
    if (w < min_b_weight) return false;
    return !require_full_counter || bits[r.K.hi - 1] == 1;
  };

  XFlipResult res;
  std::uint64_t start = 0;
  if (!feasible(start))
    throw Error(ErrorCode::degenerate_instance, "all-zeros start infeasible");
  // parent map: state -> (previous state, move cost in single flips)
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> seen;
  seen.emplace(start, std::make_pair(start, 0));
  std::deque<std::pair<std::uint64_t, long long>> frontier{{start, 0}};
  while (!frontier.empty()) {
    auto [cur, dist] = frontier.front();
    frontier.pop_front();
    if (++res.nodes_expanded > node_budget)
      throw Error(ErrorCode::resource_limit, "flip search budget exhausted");
    if (is_target(cur)) {
      res.found = true;
      res.gate_count = dist;
      res.flip_count = 0;
      for (std::uint64_t s = cur; s != start;) {
        auto& [prev, flips] = seen.at(s);
        res.flip_count += flips;
        s = prev;
      }
      return res;
    }
    auto push = [&](std::uint64_t next, int flips) {
      if (seen.count(next) || !feasible(next)) return;
      seen.emplace(next, std::make_pair(cur, flips));
      frontier.emplace_back(next, dist + 1);
    };
    for (int i = 0; i < nb; ++i) {
      std::uint64_t bi = std::uint64_t(1) << i;
      push(cur ^ bi, 1);
      for (int j = i + 1; j < nb; ++j)
        push(cur ^ bi ^ (std::uint64_t(1) << j), 2);
    }
    (void)n;
  }
  return res;
}

}  // namespace gswb
