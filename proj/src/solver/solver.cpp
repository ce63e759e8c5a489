#include <algorithm>
#include <set>
#include <string>

#include "copnum/solver.hpp"

namespace copnum {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : SolverError("state space needs an estimated " + std::to_string(required) +
                  " bytes, over the memory budget of " + std::to_string(budget) + " bytes"),
      required_(required),
      budget_(budget) {}

struct SolveResult::Impl {
  Impl(const Graph& g, CopIndex idx, Kernel k) : graph(g), index(std::move(idx)), kernel(k) {}

  Graph graph;
  CopIndex index;
  PlyTables tables;
  Kernel kernel;
  bool overall = false;
  std::vector<CopSet> placements;
  bool truncated = false;
  int max_plies = 0;
};

namespace {

void check_inputs(const Graph& g, int cop_count, const SolverConfig& config) {
  if (config.max_cops < 1 || config.max_cops > kMaxCopsHardLimit) {
    throw std::invalid_argument("configured cop cap must lie in [1, " + std::to_string(kMaxCopsHardLimit) + "]");
  }
  if (cop_count < 1 || cop_count > config.max_cops) {
    throw std::invalid_argument("cop count must lie in [1, " + std::to_string(config.max_cops) + "]");
  }
  if (g.vertex_count() == 0) throw SolverError("graph has no vertices");
  if (!is_connected(g)) throw SolverError("graph is disconnected");
}

BlockRotation rotation_for(const Graph& g, const SolverConfig& config) {
  if (config.kernel == Kernel::parallel && config.use_symmetry) return detect_block_rotation(g);
  return {};
}

std::uint64_t estimate_bytes(const Graph& g, int k, const SolverConfig& config, const BlockRotation& rot) {
  const MultisetRanker ranker(g.vertex_count(), static_cast<std::size_t>(k));
  const std::uint64_t multisets = ranker.count();
  const std::uint64_t nv = g.vertex_count();
  if (config.kernel == Kernel::reference) {
    // representatives, two ply tables, counters, worst-case queue
    return multisets * k * sizeof(Vertex) + multisets * nv * (2 * 2 + 4 + 2 * 12);
  }
  const std::uint64_t order = rot.order();
  const std::uint64_t classes = std::min(multisets, multisets / order + multisets / order / 8 + 64);
  std::uint64_t bound = 1;
  for (int i = 0; i < k; ++i) bound *= g.max_degree() + 1;
  const std::uint64_t bits = order > 1 ? order : 64;
  const std::uint64_t words = (nv + bits - 1) / bits;
  return CopIndex::estimate_bytes(multisets, k, order > 1) + classes * k * sizeof(Vertex) +
         classes * bound * 4 * 2 + classes * 8 + classes * words * 8 * 2 + classes * nv * 2 * 2 + classes;
}

}  // namespace

std::uint64_t estimate_solver_bytes(const Graph& g, int cop_count, const SolverConfig& config) {
  check_inputs(g, cop_count, config);
  return estimate_bytes(g, cop_count, config, rotation_for(g, config));
}

SolveResult cops_win(const Graph& g, int cop_count, const SolverConfig& config) {
  check_inputs(g, cop_count, config);
  const BlockRotation rot = rotation_for(g, config);
  const std::uint64_t need = estimate_bytes(g, cop_count, config, rot);
  if (need > config.memory_budget_bytes) throw BudgetExceeded(need, config.memory_budget_bytes);

  auto impl = std::make_shared<SolveResult::Impl>(g, CopIndex(g, cop_count, rot), config.kernel);
  if (config.kernel == Kernel::reference) {
    detail::run_reference_kernel(impl->graph, impl->index, impl->tables);
  } else {
    detail::run_parallel_kernel(impl->graph, impl->index, impl->tables);
  }

  const std::size_t nv = g.vertex_count();
  const auto& cop_side = impl->tables.cop_side;
  std::set<CopSet> placements;
  for (std::uint64_t c = 0; c < impl->index.class_count(); ++c) {
    const std::uint16_t* row = cop_side.data() + c * nv;
    if (std::find(row, row + nv, kNoCapture) != row + nv) continue;
    impl->overall = true;
    auto rep = impl->index.representative(c);
    for (std::size_t h = 0; h < rot.order(); ++h) {
      CopSet s;
      for (Vertex v : rep) s.push_back(rot.apply(v, h));
      std::sort(s.begin(), s.end());
      placements.insert(std::move(s));
    }
  }
  impl->placements.assign(placements.begin(), placements.end());
  if (impl->placements.size() > config.placement_limit) {
    impl->placements.resize(config.placement_limit);
    impl->truncated = true;
  }
  for (const auto* table : {&impl->tables.cop_side, &impl->tables.robber_side}) {
    for (std::uint16_t t : *table) {
      if (t != kNoCapture) impl->max_plies = std::max<int>(impl->max_plies, t);
    }
  }
  return SolveResult(std::move(impl));
}

int SolveResult::cop_count() const { return impl_->index.cop_count(); }
bool SolveResult::cops_win_overall() const { return impl_->overall; }
const std::vector<CopSet>& SolveResult::winning_initial_placements() const { return impl_->placements; }
bool SolveResult::placements_truncated() const { return impl_->truncated; }
int SolveResult::max_capture_plies() const { return impl_->max_plies; }
std::size_t SolveResult::symmetry_order() const { return impl_->index.rotation().order(); }
Kernel SolveResult::kernel() const { return impl_->kernel; }
const Graph& SolveResult::graph() const { return impl_->graph; }
const CopIndex& SolveResult::index() const { return impl_->index; }
const PlyTables& SolveResult::tables() const { return impl_->tables; }

std::uint64_t SolveResult::state_count() const {
  return impl_->index.class_count() * impl_->graph.vertex_count() * 2;
}

std::uint64_t SolveResult::full_state_count() const {
  return impl_->index.multiset_count() * impl_->graph.vertex_count() * 2;
}

std::uint16_t SolveResult::lookup(const GameState& s) const {
  validate(impl_->graph, s);
  if (s.cops.size() != static_cast<std::size_t>(cop_count())) {
    throw StateError("state has " + std::to_string(s.cops.size()) + " cops, the solve used " +
                     std::to_string(cop_count()));
  }
  const auto loc = impl_->index.locate(s.cops);
  const Vertex robber = impl_->index.rotation().inverse(s.robber, loc.steps);
  const std::uint64_t at = std::uint64_t{loc.cls} * impl_->graph.vertex_count() + robber;
  return s.to_move == Side::Cops ? impl_->tables.cop_side[at] : impl_->tables.robber_side[at];
}

bool SolveResult::is_cop_win(const GameState& s) const { return lookup(s) != kNoCapture; }

std::optional<int> SolveResult::capture_plies(const GameState& s) const {
  const std::uint16_t t = lookup(s);
  if (t == kNoCapture) return std::nullopt;
  return t;
}

std::optional<int> SolveResult::capture_turns(const GameState& s) const {
  auto plies = capture_plies(s);
  if (!plies) return std::nullopt;
  return (*plies + 1) / 2;
}

std::optional<int> cop_number(const Graph& g, int max_cops, const SolverConfig& config) {
  if (max_cops < 1 || max_cops > config.max_cops) {
    throw std::invalid_argument("max cops must lie in [1, " + std::to_string(config.max_cops) + "]");
  }
  for (int k = 1; k <= max_cops; ++k) {
    if (cops_win(g, k, config).cops_win_overall()) return k;
  }
  return std::nullopt;
}

Move optimal_cop_move(const SolveResult& r, const GameState& s) {
  if (s.to_move != Side::Cops) throw StateError("optimal cop move needs a cop-to-move state");
  if (!r.is_cop_win(s)) throw StateError("state is a robber win");
  std::optional<CopSet> best;
  int best_time = kNoCapture;
  for (CopSet& next : cop_successors(r.graph(), s.cops)) {
    auto t = r.capture_plies({next, s.robber, Side::Robber});
    if (t && *t < best_time) {
      best_time = *t;
      best = std::move(next);
    }
  }
  return cop_move_between(r.graph(), s.cops, *best);
}

}  // namespace copnum
