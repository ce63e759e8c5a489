#include <algorithm>

#include "copnum/game.hpp"

namespace copnum {

GameState& GameState::canonicalize() {
  std::sort(cops.begin(), cops.end());
  return *this;
}

void validate(const Graph& g, const GameState& s) {
  const auto n = g.vertex_count();
  if (s.robber >= n) throw StateError("robber position out of range");
  for (Vertex c : s.cops) {
    if (c >= n) throw StateError("cop position out of range");
  }
  if (!std::is_sorted(s.cops.begin(), s.cops.end())) throw StateError("cop multiset is not sorted");
}

namespace {

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out{v};
  auto nb = g.neighbors(v);
  out.insert(out.end(), nb.begin(), nb.end());
  return out;
}

template <typename Fn>
void for_each_cop_product(const Graph& g, const CopSet& cops, Fn&& fn) {
  std::vector<std::vector<Vertex>> choices;
  choices.reserve(cops.size());
  for (Vertex c : cops) choices.push_back(closed_neighborhood(g, c));

  std::vector<std::size_t> digit(cops.size(), 0);
  CopSet current(cops.size());
  while (true) {
    for (std::size_t i = 0; i < cops.size(); ++i) current[i] = choices[i][digit[i]];
    fn(current);
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
    if (i == digit.size()) return;
  }
}

}  // namespace

std::vector<CopSet> cop_successors(const Graph& g, const CopSet& cops) {
  std::vector<CopSet> out;
  for_each_cop_product(g, cops, [&](const CopSet& dest) {
    CopSet sorted = dest;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GameState> legal_moves(const Graph& g, const GameState& s, Dedup dedup) {
  validate(g, s);
  std::vector<GameState> out;
  if (s.to_move == Side::Robber) {
    for (Vertex r : closed_neighborhood(g, s.robber)) out.push_back({s.cops, r, Side::Cops});
    return out;
  }
  if (dedup == Dedup::yes) {
    for (auto& cops : cop_successors(g, s.cops)) out.push_back({std::move(cops), s.robber, Side::Robber});
    return out;
  }
  for_each_cop_product(g, s.cops, [&](const CopSet& dest) {
    GameState next{dest, s.robber, Side::Robber};
    out.push_back(std::move(next.canonicalize()));
  });
  return out;
}

GameState apply(const Graph& g, const GameState& s, const Move& m) {
  validate(g, s);
  if (m.side != s.to_move) throw StateError("move is for the wrong side");
  auto legal_step = [&](Vertex from, Vertex to) { return from == to || g.adjacent(from, to); };
  if (m.side == Side::Robber) {
    if (m.destinations.size() != 1 || !legal_step(s.robber, m.destinations[0])) {
      throw StateError("illegal robber move");
    }
    return {s.cops, m.destinations[0], Side::Cops};
  }
  if (m.destinations.size() != s.cops.size()) throw StateError("cop move has wrong arity");
  for (std::size_t i = 0; i < s.cops.size(); ++i) {
    if (!legal_step(s.cops[i], m.destinations[i])) throw StateError("illegal cop step");
  }
  GameState next{m.destinations, s.robber, Side::Robber};
  return next.canonicalize();
}

Move cop_move_between(const Graph& g, const CopSet& from, const CopSet& to) {
  Move move{Side::Cops, std::vector<Vertex>(from.size())};
  std::vector<char> used(to.size(), 0);
  // Tiny bipartite matching by backtracking; cop counts are single digits.
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == from.size()) return true;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j]) continue;
      if (j > 0 && to[j] == to[j - 1] && !used[j - 1]) continue;
      if (from[i] != to[j] && !g.adjacent(from[i], to[j])) continue;
      used[j] = 1;
      move.destinations[i] = to[j];
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  if (from.size() != to.size() || !assign(assign, 0)) {
    throw StateError("target cop multiset is not reachable in one move");
  }
  return move;
}

bool is_capture(const GameState& s) {
  return std::find(s.cops.begin(), s.cops.end(), s.robber) != s.cops.end();
}

bool trapped(const Graph& g, const CopSet& cops, Vertex robber) {
  if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
    throw CapturedStateError("robber is already captured");
  }
  for (Vertex v : g.neighbors(robber)) {
    bool covered = false;
    for (Vertex c : cops) {
      if (c == v || (c != robber && g.adjacent(c, v))) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool n_trapped(const Graph& g, const CopSet& cops, Vertex robber, int depth, int depth_limit) {
  if (depth < 2 || depth > depth_limit) {
    throw StateError("trap depth must lie in [2, " + std::to_string(depth_limit) + "]");
  }
  if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
    throw CapturedStateError("robber is already captured");
  }
  const auto replies = cop_successors(g, cops);
  for (Vertex u : g.neighbors(robber)) {
    if (std::find(cops.begin(), cops.end(), u) != cops.end()) continue;
    bool answered = std::any_of(replies.begin(), replies.end(), [&](const CopSet& reply) {
      if (std::binary_search(reply.begin(), reply.end(), u)) return true;
      return depth == 2 ? trapped(g, reply, u) : n_trapped(g, reply, u, depth - 1, depth_limit);
    });
    if (!answered) return false;
  }
  return true;
}

}  // namespace copnum
