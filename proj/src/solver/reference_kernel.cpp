// Retrograde attractor over the unreduced state space. Deliberately plain: it
// enumerates moves through the game engine and serves as the oracle for the
// bitset kernel.

#include <deque>

#include "copnum/solver.hpp"

namespace copnum::detail {

namespace {

struct Pending {
  std::uint32_t cls;
  Vertex robber;
  Side to_move;
};

}  // namespace

void run_reference_kernel(const Graph& g, const CopIndex& index, PlyTables& tables) {
  if (index.rotation().order() != 1) {
    throw SolverError("reference kernel needs the unreduced index");
  }
  const std::size_t nv = g.vertex_count();
  const std::uint64_t classes = index.class_count();
  tables.cop_side.assign(classes * nv, kNoCapture);
  tables.robber_side.assign(classes * nv, kNoCapture);

  // Robber-side states stay open until every robber option (pass included) is lost.
  std::vector<std::uint32_t> remaining(classes * nv);
  for (std::uint64_t c = 0; c < classes; ++c) {
    for (Vertex r = 0; r < nv; ++r) remaining[c * nv + r] = static_cast<std::uint32_t>(g.degree(r) + 1);
  }

  std::deque<Pending> queue;
  for (std::uint64_t c = 0; c < classes; ++c) {
    for (Vertex r : index.representative(c)) {
      const std::uint64_t at = c * nv + r;
      if (tables.cop_side[at] == 0) continue;
      tables.cop_side[at] = 0;
      tables.robber_side[at] = 0;
      queue.push_back({static_cast<std::uint32_t>(c), r, Side::Cops});
      queue.push_back({static_cast<std::uint32_t>(c), r, Side::Robber});
    }
  }

  while (!queue.empty()) {
    const Pending s = queue.front();
    queue.pop_front();
    const std::uint64_t at = std::uint64_t{s.cls} * nv + s.robber;
    if (s.to_move == Side::Robber) {
      // Cop moves are reversible, so predecessors are the cop successors.
      const int t = tables.robber_side[at];
      auto rep = index.representative(s.cls);
      for (const CopSet& prev : cop_successors(g, CopSet(rep.begin(), rep.end()))) {
        const std::uint64_t p = std::uint64_t{index.locate(prev).cls} * nv + s.robber;
        if (tables.cop_side[p] != kNoCapture) continue;
        tables.cop_side[p] = static_cast<std::uint16_t>(t + 1);
        queue.push_back({index.locate(prev).cls, s.robber, Side::Cops});
      }
    } else {
      const int t = tables.cop_side[at];
      auto visit = [&](Vertex from) {
        const std::uint64_t p = std::uint64_t{s.cls} * nv + from;
        if (tables.robber_side[p] != kNoCapture) return;
        if (--remaining[p] == 0) {
          if (t + 1 >= kNoCapture) throw SolverError("capture time overflows the ply table");
          tables.robber_side[p] = static_cast<std::uint16_t>(t + 1);
          queue.push_back({s.cls, from, Side::Robber});
        }
      };
      visit(s.robber);
      for (Vertex from : g.neighbors(s.robber)) visit(from);
    }
  }
}

}  // namespace copnum::detail
