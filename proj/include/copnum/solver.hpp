#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"
#include "copnum/state_space.hpp"

namespace copnum {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public SolverError {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required_bytes() const { return required_; }
  std::uint64_t budget_bytes() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

enum class Kernel {
  // Bitset value iteration over rotation classes, OpenMP-parallel across classes.
  parallel,
  // Retrograde attractor with successor counters over the full state space; serial.
  reference,
};

struct SolverConfig {
  int max_cops = 4;
  std::uint64_t memory_budget_bytes = std::uint64_t{2} << 30;
  Kernel kernel = Kernel::parallel;
  // Quotient by the detected block rotation (parallel kernel only).
  bool use_symmetry = true;
  std::size_t placement_limit = 1000;
};

inline constexpr std::uint16_t kNoCapture = 0xFFFF;

// Raw per-state tables. Entry [cls * V + robber] holds the capture time in
// plies for the state with cops = representative(cls); kNoCapture marks a robber win.
struct PlyTables {
  std::vector<std::uint16_t> cop_side;
  std::vector<std::uint16_t> robber_side;
};

class SolveResult {
 public:
  int cop_count() const;
  bool cops_win_overall() const;
  const std::vector<CopSet>& winning_initial_placements() const;
  bool placements_truncated() const;

  bool is_cop_win(const GameState& s) const;
  // Plies until capture under optimal play; nullopt for robber-win states.
  std::optional<int> capture_plies(const GameState& s) const;
  // The same time counted in cop turns.
  std::optional<int> capture_turns(const GameState& s) const;
  // Largest finite capture time over all states.
  int max_capture_plies() const;

  // States actually stored, and states of the unreduced game.
  std::uint64_t state_count() const;
  std::uint64_t full_state_count() const;
  std::size_t symmetry_order() const;
  Kernel kernel() const;

  const Graph& graph() const;
  const CopIndex& index() const;
  const PlyTables& tables() const;

 private:
  struct Impl;
  explicit SolveResult(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::uint16_t lookup(const GameState& s) const;

  std::shared_ptr<const Impl> impl_;

  friend SolveResult cops_win(const Graph&, int, const SolverConfig&);
};

// Bytes the chosen kernel would allocate for this game.
std::uint64_t estimate_solver_bytes(const Graph& g, int cop_count, const SolverConfig& config = {});

SolveResult cops_win(const Graph& g, int cop_count, const SolverConfig& config = {});

// Least k <= max_cops whose game the cops win; nullopt when none does.
std::optional<int> cop_number(const Graph& g, int max_cops = 4, const SolverConfig& config = {});

// A cop move from a cop-win CopSide state to a successor of least capture time,
// ties broken by the smallest sorted cop multiset.
Move optimal_cop_move(const SolveResult& r, const GameState& s);

inline constexpr std::size_t kMinimaxVertexCap = 12;
inline constexpr int kMinimaxCopCap = 2;

// Independent check by explicit minimax on ordered cop tuples. Small inputs only.
bool naive_minimax_oracle(const Graph& g, int cop_count);

namespace detail {

// Kernels fill `tables`, sized class_count * V each.
void run_reference_kernel(const Graph& g, const CopIndex& index, PlyTables& tables);
void run_parallel_kernel(const Graph& g, const CopIndex& index, PlyTables& tables);

}  // namespace detail

}  // namespace copnum
