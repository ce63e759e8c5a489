#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/gp_family.hpp"
#include "copnum/graph.hpp"
#include "copnum/relation.hpp"

namespace copnum {

// A cycle as its vertex sequence; canonical form starts at the smallest vertex
// and walks toward the smaller of its two neighbors on the cycle.
using Cycle = std::vector<Vertex>;

Cycle canonical_cycle(const Cycle& c);

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 12;

// Every simple cycle of the given length through v, canonical, sorted.
std::vector<Cycle> cycles_of_length_through(const Graph& g, Vertex v, int length);

// Two 8-cycles meeting in exactly the path shared_path[0] - center - shared_path[2].
struct CyclePair {
  Cycle cycle_a;
  Cycle cycle_b;
  Vertex center = 0;
  std::vector<Vertex> shared_path;

  bool operator==(const CyclePair&) const = default;
};

// Sorted by (center, cycle_a, cycle_b); cycle_a < cycle_b.
std::vector<CyclePair> two_trap_pairs(const Graph& g);
std::vector<CyclePair> two_trap_pairs_at(const Graph& g, Vertex center);
bool admits_two_trap(const Graph& g);

// Checks a pair against the raw edge sets of g; returns an empty string when
// valid, otherwise the first broken condition.
std::string cycle_pair_defect(const Graph& g, const CyclePair& p);

enum class TreeSide { A, B };

struct CoincidenceRelation {
  LinearRelation relation;
  TreeSide side = TreeSide::A;
  // Every leaf pair that coincides under the relation, labels like "b_{i-2k+1}".
  std::vector<std::pair<std::string, std::string>> leaf_pairs;
  bool satisfied = false;
};

// Relations in (n,k) under which two distinct same-ring leaves of the distance-4
// label tree rooted at a_i (side A) or b_i (side B) name the same vertex.
// Each relation appears once, sorted; `satisfied` evaluates it at (n,k).
std::vector<CoincidenceRelation> distance4_coincidences(int n, int k, TreeSide side);

// The relation list alone, independent of any instance.
std::vector<LinearRelation> distance4_relation_forms(TreeSide side);

// Robber-to-move state with three cops: two cops antipodal to the robber on two
// 8-cycles meeting in a path of two robber edges, the third within distance 2
// through the remaining robber edge.
bool conforms_to_two_trap_shape(const Graph& g, const CopSet& cops, Vertex robber);

struct TrapScanOptions {
  int depth = 2;
  // Scan one robber per orbit of the detected block rotation.
  bool use_symmetry = true;
  // Keep every hit, not just the violations.
  bool collect_hits = false;
  std::size_t violation_limit = 100;
};

struct TrapHit {
  GameState state;
  bool conforming = false;
};

struct ConformanceReport {
  std::uint64_t robbers_scanned = 0;
  std::uint64_t states_scanned = 0;
  std::uint64_t trapped = 0;
  // States that are depth-trapped but not trapped.
  std::uint64_t two_trapped_not_trapped = 0;
  std::uint64_t conforming = 0;
  std::uint64_t violation_count = 0;
  std::vector<GameState> violations;
  std::vector<TrapHit> hits;
};

// Robber-to-move states with every cop within distance 2*depth of the robber
// that are depth-trapped but not trapped. Conformance to the two-trap shape is
// only judged for three cops at depth 2; other scans leave it false and count no violations.
ConformanceReport scan_traps(const Graph& g, int cop_count, const TrapScanOptions& options = {});

struct ConformanceOptions {
  // The characterization assumes girth 8; relaxing lets the scan run anyway.
  bool require_girth8 = true;
  bool use_symmetry = true;
  std::size_t violation_limit = 100;
};

// Throws std::invalid_argument unless g is cubic, cop_count is 3, and (by
// default) girth is at least 8.
ConformanceReport lemma42_conformance(const Graph& g, int cop_count = 3,
                                      const ConformanceOptions& options = {});

struct SurveyRow {
  GpParams params;
  bool admits_two_trap = false;
  TagSet families;
};

struct FamilyCoverage {
  RelationTag family;
  int members = 0;
  int admitting = 0;
};

struct Lemma51Survey {
  std::vector<SurveyRow> rows;
  // Rows that admit the structure with no family tag.
  std::vector<GpParams> necessary_violations;
  // Family members that do not admit it.
  std::vector<GpParams> converse_gaps;
  std::vector<FamilyCoverage> coverage;
};

inline constexpr int kSurveyDefaultCap = 60;

// Every girth-8 GP(n,k), n <= n_max, with k the smallest member of its class.
Lemma51Survey lemma51_survey(int n_max, int cap = kSurveyDefaultCap);

}  // namespace copnum
