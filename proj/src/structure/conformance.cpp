#include <algorithm>
#include <stdexcept>

#include "copnum/state_space.hpp"
#include "copnum/structure.hpp"

namespace copnum {

namespace {

// Antipodes of the two cycles of a qualifying pair centered at the robber,
// keyed by the robber neighbor left off the shared path.
struct Shape {
  Vertex antipode_a;
  Vertex antipode_b;
  Vertex third_neighbor;
};

std::vector<Shape> shapes_at(const Graph& g, Vertex robber) {
  const auto dist = bfs_distances(g, robber);
  std::vector<Shape> out;
  for (const CyclePair& p : two_trap_pairs_at(g, robber)) {
    auto antipode = [&](const Cycle& c) {
      const std::size_t i = static_cast<std::size_t>(std::find(c.begin(), c.end(), robber) - c.begin());
      return c[(i + 4) % c.size()];
    };
    const Vertex x = antipode(p.cycle_a), y = antipode(p.cycle_b);
    if (dist[x] != 4 || dist[y] != 4) continue;
    for (Vertex v : g.neighbors(robber)) {
      if (v != p.shared_path[0] && v != p.shared_path[2]) out.push_back({x, y, v});
    }
  }
  return out;
}

bool matches(const Graph& g, const std::vector<Shape>& shapes, const CopSet& cops, Vertex robber) {
  for (const Shape& s : shapes) {
    // Try each cop as the one near the third edge.
    for (std::size_t near = 0; near < cops.size(); ++near) {
      const Vertex c = cops[near];
      if (c != s.third_neighbor && !(c != robber && g.adjacent(c, s.third_neighbor))) continue;
      CopSet rest;
      for (std::size_t i = 0; i < cops.size(); ++i) {
        if (i != near) rest.push_back(cops[i]);
      }
      std::sort(rest.begin(), rest.end());
      CopSet want{std::min(s.antipode_a, s.antipode_b), std::max(s.antipode_a, s.antipode_b)};
      if (rest == want) return true;
    }
  }
  return false;
}

}  // namespace

bool conforms_to_two_trap_shape(const Graph& g, const CopSet& cops, Vertex robber) {
  if (cops.size() != 3) return false;
  CopSet sorted = cops;
  std::sort(sorted.begin(), sorted.end());
  return matches(g, shapes_at(g, robber), sorted, robber);
}

ConformanceReport scan_traps(const Graph& g, int cop_count, const TrapScanOptions& options) {
  if (cop_count < 1 || cop_count > kMaxCopsHardLimit) throw std::invalid_argument("cop count out of range");
  if (options.depth < 2 || options.depth > kDefaultTrapDepthLimit) {
    throw std::invalid_argument("trap depth must lie in [2, " + std::to_string(kDefaultTrapDepthLimit) + "]");
  }
  const std::size_t nv = g.vertex_count();
  const int radius = 2 * options.depth;
  const bool judge = cop_count == 3 && options.depth == 2;
  std::vector<Vertex> robbers;
  const BlockRotation rot = options.use_symmetry ? detect_block_rotation(g) : BlockRotation{};
  for (Vertex r = 0; r < nv; ++r) {
    if (r % rot.block_len == 0) robbers.push_back(r);
  }

  std::vector<ConformanceReport> partial(robbers.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t ri = 0; ri < robbers.size(); ++ri) {
    const Vertex r = robbers[ri];
    ConformanceReport& rep = partial[ri];
    rep.robbers_scanned = 1;
    const auto dist = bfs_distances(g, r);
    std::vector<Vertex> ball;
    for (Vertex v = 0; v < nv; ++v) {
      if (v != r && dist[v] != kUnreachable && dist[v] <= radius) ball.push_back(v);
    }
    if (ball.empty()) continue;
    const auto shapes = judge ? shapes_at(g, r) : std::vector<Shape>{};

    // Nondecreasing index tuples over the ball enumerate the cop multisets.
    std::vector<std::size_t> idx(cop_count, 0);
    CopSet cops(cop_count);
    while (true) {
      for (int i = 0; i < cop_count; ++i) cops[i] = ball[idx[i]];
      ++rep.states_scanned;
      if (trapped(g, cops, r)) {
        ++rep.trapped;
      } else if (n_trapped(g, cops, r, options.depth)) {
        ++rep.two_trapped_not_trapped;
        const bool ok = judge && matches(g, shapes, cops, r);
        if (ok) {
          ++rep.conforming;
        } else if (judge) {
          ++rep.violation_count;
          if (rep.violations.size() < options.violation_limit) rep.violations.push_back({cops, r, Side::Robber});
        }
        if (options.collect_hits) rep.hits.push_back({{cops, r, Side::Robber}, ok});
      }
      int i = cop_count - 1;
      while (i >= 0 && idx[i] + 1 == ball.size()) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < cop_count; ++j) idx[j] = idx[i];
    }
  }

  ConformanceReport total;
  for (auto& rep : partial) {
    total.robbers_scanned += rep.robbers_scanned;
    total.states_scanned += rep.states_scanned;
    total.trapped += rep.trapped;
    total.two_trapped_not_trapped += rep.two_trapped_not_trapped;
    total.conforming += rep.conforming;
    total.violation_count += rep.violation_count;
    for (auto& v : rep.violations) {
      if (total.violations.size() < options.violation_limit) total.violations.push_back(std::move(v));
    }
    for (auto& h : rep.hits) total.hits.push_back(std::move(h));
  }
  return total;
}

ConformanceReport lemma42_conformance(const Graph& g, int cop_count, const ConformanceOptions& options) {
  if (cop_count != 3) throw std::invalid_argument("the characterization is for three cops");
  if (!g.is_regular(3)) throw std::invalid_argument("graph is not cubic");
  const auto gi = girth(g);
  if (options.require_girth8 && (!gi || *gi < 8)) {
    throw std::invalid_argument("graph girth is below 8");
  }
  TrapScanOptions scan;
  scan.use_symmetry = options.use_symmetry;
  scan.violation_limit = options.violation_limit;
  return scan_traps(g, 3, scan);
}

Lemma51Survey lemma51_survey(int n_max, int cap) {
  if (n_max > cap) {
    throw std::invalid_argument("survey bound " + std::to_string(n_max) + " exceeds the cap " + std::to_string(cap));
  }
  Lemma51Survey survey;
  const TagSet& families = girth8_exception_family();
  for (RelationTag t : families.tags()) survey.coverage.push_back({t, 0, 0});

  std::vector<GpParams> params;
  for (int n = 5; n <= n_max; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      if (min_k(n, k) == k) params.push_back({n, k});
    }
  }
  std::vector<char> keep(params.size(), 0);
  std::vector<SurveyRow> rows(params.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < params.size(); ++i) {
    const Graph g = build_gp(params[i]);
    if (girth(g) != 8) continue;
    keep[i] = 1;
    rows[i] = {params[i], admits_two_trap(g), satisfied_tags(params[i].n, params[i].k) & families};
  }

  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!keep[i]) continue;
    const SurveyRow& row = rows[i];
    survey.rows.push_back(row);
    if (row.admits_two_trap && row.families.empty()) survey.necessary_violations.push_back(row.params);
    if (!row.admits_two_trap && !row.families.empty()) survey.converse_gaps.push_back(row.params);
    for (auto& cov : survey.coverage) {
      if (!row.families.contains(cov.family)) continue;
      ++cov.members;
      if (row.admits_two_trap) ++cov.admitting;
    }
  }
  return survey;
}

}  // namespace copnum
