#pragma once

#include <stdexcept>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

enum class Side : std::uint8_t { Cops, Robber };

inline Side other(Side s) { return s == Side::Cops ? Side::Robber : Side::Cops; }

// Sorted multiset of cop positions; cops may share a vertex.
using CopSet = std::vector<Vertex>;

struct GameState {
  CopSet cops;
  Vertex robber = 0;
  Side to_move = Side::Cops;

  // Sorts the cop multiset in place and returns *this.
  GameState& canonicalize();
  bool operator==(const GameState&) const = default;
};

// Cop moves list one destination per cop, aligned with the sorted cops of the
// source state; a robber move has a single destination. Staying put is a pass.
struct Move {
  Side side = Side::Cops;
  std::vector<Vertex> destinations;

  bool operator==(const Move&) const = default;
};

class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by the trap predicates when the robber already shares a vertex with a cop.
class CapturedStateError : public StateError {
 public:
  using StateError::StateError;
};

// Throws StateError unless every index is in range and the cops are sorted.
void validate(const Graph& g, const GameState& s);

enum class Dedup { no, yes };

// Successor states for the side to move. Cop successors are the product of the
// closed neighborhoods of the cops, re-sorted; Dedup::yes removes repeated multisets.
std::vector<GameState> legal_moves(const Graph& g, const GameState& s, Dedup dedup = Dedup::yes);

// Every cop multiset reachable in one cop turn from `cops`, sorted and deduplicated.
std::vector<CopSet> cop_successors(const Graph& g, const CopSet& cops);

GameState apply(const Graph& g, const GameState& s, const Move& m);

// Some cop destination assignment realizing the move from `from` to the multiset `to`.
Move cop_move_between(const Graph& g, const CopSet& from, const CopSet& to);

bool is_capture(const GameState& s);

// Every edge {robber, v} has a cop on v or on a neighbor of v other than the robber.
bool trapped(const Graph& g, const CopSet& cops, Vertex robber);

inline constexpr int kDefaultTrapDepthLimit = 4;

// depth 2: every non-pass robber move to u either walks into a cop or admits a cop
// reply that captures or traps the robber at u. depth m: the reply must (m-1)-trap.
bool n_trapped(const Graph& g, const CopSet& cops, Vertex robber, int depth,
               int depth_limit = kDefaultTrapDepthLimit);

}  // namespace copnum
