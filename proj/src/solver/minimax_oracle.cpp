// Minimax on ordered cop tuples with a move horizon. Capture within d plies is
// decided by plain recursion; the horizon grows until it changes nothing, at
// which point it covers every finite capture time.

#include <algorithm>
#include <string>

#include "copnum/solver.hpp"

namespace copnum {

namespace {

class Horizon {
 public:
  Horizon(const Graph& g, int cops) : g_(g), cops_(cops), nv_(g.vertex_count()) {
    tuples_ = 1;
    for (int i = 0; i < cops; ++i) tuples_ *= nv_;
  }

  std::size_t state_count() const { return tuples_ * nv_ * 2; }
  std::size_t tuple_count() const { return tuples_; }
  std::size_t state_of(std::size_t tuple, Vertex robber, Side side) const {
    return (tuple * nv_ + robber) * 2 + (side == Side::Robber ? 1 : 0);
  }

  // memo[d][state]: 0 unknown, 1 robber survives d plies, 2 captured within d.
  bool win(std::size_t state, int d) {
    while (memo_.size() <= static_cast<std::size_t>(d)) memo_.emplace_back(state_count(), 0);
    auto& slot = memo_[d][state];
    if (slot != 0) return slot == 2;

    const bool robber_moves = state % 2 == 1;
    const Vertex robber = static_cast<Vertex>((state / 2) % nv_);
    const std::size_t tuple = state / 2 / nv_;
    std::vector<Vertex> pos = decode(tuple);

    bool result;
    if (std::find(pos.begin(), pos.end(), robber) != pos.end()) {
      result = true;
    } else if (d == 0) {
      result = false;
    } else if (robber_moves) {
      result = win(state_of(tuple, robber, Side::Cops), d - 1);
      for (Vertex v : g_.neighbors(robber)) {
        if (!result) break;
        result = win(state_of(tuple, v, Side::Cops), d - 1);
      }
    } else {
      result = any_cop_move(pos, 0, robber, d);
    }
    memo_[d][state] = result ? 2 : 1;
    return result;
  }

 private:
  std::vector<Vertex> decode(std::size_t tuple) const {
    std::vector<Vertex> pos(cops_);
    for (int i = 0; i < cops_; ++i) {
      pos[i] = static_cast<Vertex>(tuple % nv_);
      tuple /= nv_;
    }
    return pos;
  }

  std::size_t encode(const std::vector<Vertex>& pos) const {
    std::size_t tuple = 0;
    for (int i = cops_; i-- > 0;) tuple = tuple * nv_ + pos[i];
    return tuple;
  }

  bool any_cop_move(std::vector<Vertex>& pos, int i, Vertex robber, int d) {
    if (i == cops_) return win(state_of(encode(pos), robber, Side::Robber), d - 1);
    const Vertex from = pos[i];
    if (any_cop_move(pos, i + 1, robber, d)) return true;
    for (Vertex v : g_.neighbors(from)) {
      pos[i] = v;
      const bool ok = any_cop_move(pos, i + 1, robber, d);
      pos[i] = from;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  int cops_;
  std::size_t nv_;
  std::size_t tuples_;
  std::vector<std::vector<std::uint8_t>> memo_;
};

}  // namespace

bool naive_minimax_oracle(const Graph& g, int cop_count) {
  if (g.vertex_count() == 0 || g.vertex_count() > kMinimaxVertexCap) {
    throw std::invalid_argument("minimax oracle handles 1 to " + std::to_string(kMinimaxVertexCap) + " vertices");
  }
  if (cop_count < 1 || cop_count > kMinimaxCopCap) {
    throw std::invalid_argument("minimax oracle handles 1 to " + std::to_string(kMinimaxCopCap) + " cops");
  }
  const std::size_t nv = g.vertex_count();
  Horizon h(g, cop_count);

  // A horizon that adds no state over the previous one is a fixpoint.
  int d = 0;
  for (;; ++d) {
    bool same = true;
    for (std::size_t s = 0; s < h.state_count() && same; ++s) same = h.win(s, d) == h.win(s, d + 1);
    if (same) break;
  }

  for (std::size_t tuple = 0; tuple < h.tuple_count(); ++tuple) {
    bool all = true;
    for (Vertex r = 0; r < nv && all; ++r) all = h.win(h.state_of(tuple, r, Side::Cops), d);
    if (all) return true;
  }
  return false;
}

}  // namespace copnum
