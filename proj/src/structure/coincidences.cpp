#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <string_view>

#include "copnum/structure.hpp"

namespace copnum {

namespace {

enum class Ring { a, b };

// A node of the distance-4 label tree: the branch path from the root (one digit
// per level), its ring, and its subscript i + offset + k_mult*k.
struct TreeNode {
  std::string_view path;
  Ring ring;
  int offset;
  int k_mult;
};

constexpr Ring a = Ring::a;
constexpr Ring b = Ring::b;

constexpr std::array<TreeNode, 46> kTreeA{{
    {"0", a, 0, 0},     {"1", a, 1, 0},     {"2", b, 0, 0},     {"3", a, -1, 0},
    {"11", a, 2, 0},    {"12", b, 1, 0},    {"21", b, 0, 1},    {"22", b, 0, -1},
    {"31", b, -1, 0},   {"32", a, -2, 0},   {"111", a, 3, 0},   {"112", b, 2, 0},
    {"121", b, 1, 1},   {"122", b, 1, -1},  {"211", b, 0, 2},   {"212", a, 0, 1},
    {"221", a, 0, -1},  {"222", b, 0, -2},  {"311", b, -1, 1},  {"312", b, -1, -1},
    {"321", b, -2, 0},  {"322", a, -3, 0},  {"1111", a, 4, 0},  {"1112", b, 3, 0},
    {"1121", b, 2, 1},  {"1122", b, 2, -1}, {"1211", b, 1, 2},  {"1212", a, 1, 1},
    {"1221", a, 1, -1}, {"1222", b, 1, -2}, {"2111", b, 0, 3},  {"2112", a, 0, 2},
    {"2121", a, 1, 1},  {"2122", a, -1, 1}, {"2211", a, 1, -1}, {"2212", a, -1, -1},
    {"2221", a, 0, -2}, {"2222", b, 0, -3}, {"3111", b, -1, 2}, {"3112", a, -1, 1},
    {"3121", a, -1, -1}, {"3122", b, -1, -2}, {"3211", b, -2, 1}, {"3212", b, -2, -1},
    {"3221", b, -3, 0}, {"3222", a, -4, 0},
}};

constexpr std::array<TreeNode, 46> kTreeB{{
    {"0", b, 0, 0},     {"1", b, 0, 1},     {"2", a, 0, 0},     {"3", b, 0, -1},
    {"11", b, 0, 2},    {"12", a, 0, 1},    {"21", a, 1, 0},    {"22", a, -1, 0},
    {"31", a, 0, -1},   {"32", b, 0, -2},   {"111", b, 0, 3},   {"112", a, 0, 2},
    {"121", a, 1, 1},   {"122", a, -1, 1},  {"211", a, 2, 0},   {"212", b, 1, 0},
    {"221", b, -1, 0},  {"222", a, -2, 0},  {"311", a, 1, -1},  {"312", a, -1, -1},
    {"321", a, 0, -2},  {"322", b, 0, -3},  {"1111", b, 0, 4},  {"1112", a, 0, 3},
    {"1121", a, 1, 2},  {"1122", a, -1, 2}, {"1211", a, 2, 1},  {"1212", b, 1, 1},
    {"1221", b, -1, 1}, {"1222", a, -2, 1}, {"2111", a, 3, 0},  {"2112", b, 2, 0},
    {"2121", b, 1, 1},  {"2122", b, 1, -1}, {"2211", b, -1, 1}, {"2212", b, -1, -1},
    {"2221", b, -2, 0}, {"2222", a, -3, 0}, {"3111", a, 2, -1}, {"3112", b, 1, -1},
    {"3121", b, -1, -1}, {"3122", a, -2, -1}, {"3211", a, 1, -2}, {"3212", a, -1, -2},
    {"3221", a, 0, -3}, {"3222", b, 0, -4},
}};

constexpr std::size_t kLeafDepth = 4;

std::string label(const TreeNode& node) {
  std::string sub = "i";
  if (node.k_mult != 0) {
    sub += node.k_mult > 0 ? "+" : "-";
    if (std::abs(node.k_mult) != 1) sub += std::to_string(std::abs(node.k_mult));
    sub += "k";
  }
  if (node.offset > 0) sub += "+" + std::to_string(node.offset);
  if (node.offset < 0) sub += std::to_string(node.offset);
  return std::string(node.ring == Ring::a ? "a" : "b") + "_{" + sub + "}";
}

// Does m*n = k_coef*k + constant admit a valid parameter pair?
bool realizable(const LinearRelation& r) {
  // Coefficients here are tiny, so n never needs to exceed a few hundred.
  for (int k = 1; k <= 200; ++k) {
    const int rhs = r.k_coef * k + r.constant;
    if (r.n_coef == 0) {
      if (rhs == 0) return true;
      continue;
    }
    if (rhs % r.n_coef != 0) continue;
    if (GpParams::valid(rhs / r.n_coef, k)) return true;
  }
  return false;
}

using LeafPairs = std::vector<std::pair<std::string, std::string>>;

// Two leaves name the same vertex when their subscripts agree mod n, i.e.
// m*n = +-(difference) for some m >= 0. The difference is at most 8 + 8k in
// absolute value and n > 2k, so m <= 5.
std::map<LinearRelation, LeafPairs> relations_for(TreeSide side) {
  const auto& tree = side == TreeSide::A ? kTreeA : kTreeB;
  std::vector<const TreeNode*> leaves;
  for (const auto& node : tree) {
    if (node.path.size() == kLeafDepth) leaves.push_back(&node);
  }
  std::map<LinearRelation, LeafPairs> out;
  for (std::size_t x = 0; x < leaves.size(); ++x) {
    for (std::size_t y = x + 1; y < leaves.size(); ++y) {
      const TreeNode& p = *leaves[x];
      const TreeNode& q = *leaves[y];
      if (p.ring != q.ring) continue;
      const int d0 = p.offset - q.offset;
      const int d1 = p.k_mult - q.k_mult;
      if (d0 == 0 && d1 == 0) continue;
      for (int sign : {1, -1}) {
        for (int m = 0; m <= 5; ++m) {
          LinearRelation r{m, sign * d1, sign * d0};
          if (m == 0 && sign < 0) continue;
          if (!realizable(r)) continue;
          out[r.normalized()].emplace_back(label(p), label(q));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<LinearRelation> distance4_relation_forms(TreeSide side) {
  std::vector<LinearRelation> out;
  for (const auto& [rel, pairs] : relations_for(side)) out.push_back(rel);
  return out;
}

std::vector<CoincidenceRelation> distance4_coincidences(int n, int k, TreeSide side) {
  GpParams::make(n, k);
  std::vector<CoincidenceRelation> out;
  for (auto& [rel, pairs] : relations_for(side)) {
    out.push_back({rel, side, std::move(pairs), rel.holds(n, k)});
  }
  return out;
}

}  // namespace copnum
