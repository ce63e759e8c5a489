#pragma once

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "copnum/graph.hpp"
#include "copnum/relation.hpp"

namespace copnum {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of the generalized Petersen graph GP(n, k): n >= 5, 1 <= k, 2k < n.
struct GpParams {
  int n = 0;
  int k = 0;

  static bool valid(int n, int k) { return n >= 5 && k >= 1 && 2 * k < n; }
  // Throws ParamError unless valid(n, k).
  static GpParams make(int n, int k);

  auto operator<=>(const GpParams&) const = default;
};

// Outer vertex a_i is i, inner vertex b_i is n + i (indices taken mod n).
Vertex outer_vertex(GpParams p, int i);
Vertex inner_vertex(GpParams p, int i);

Graph build_gp(GpParams p);

// GP(n,k) and GP(n,l) are isomorphic iff k == l or k*l = +-1 (mod n).
bool iso_equivalent(int n, int k, int l);

// Smallest l in the isomorphism class of GP(n, k).
int min_k(int n, int k);

// Girth read off the standard girth table for the min-k representative.
int predicted_girth(int n, int k);

// Parameter families that can exclude cop number 4 (the full exception list).
// The K5, N2Kp4, N3Kp3, N3Km3, N4Kp2, N4Km2 members form the girth-8 sub-list.
enum class RelationTag : std::uint8_t {
  K1, K2, K3, K4, K5,
  N2Kp2, N2Kp3, N2Kp4,
  N3K, N3Kp2, N3Km2, N3Kp3, N3Km3,
  N4K, N4Kp2, N4Km2,
  N5K, N5Kd2,
  N6K,
  N7K, N7Kd2, N7Kd3,
};
inline constexpr std::size_t kRelationTagCount = 22;

LinearRelation relation_of(RelationTag tag);
std::string tag_name(RelationTag tag);

class TagSet {
 public:
  TagSet() = default;
  TagSet(std::initializer_list<RelationTag> tags) {
    for (auto t : tags) insert(t);
  }

  void insert(RelationTag t) { bits_.set(static_cast<std::size_t>(t)); }
  bool contains(RelationTag t) const { return bits_.test(static_cast<std::size_t>(t)); }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }
  TagSet operator&(const TagSet& o) const { return TagSet(bits_ & o.bits_); }
  bool operator==(const TagSet&) const = default;

  std::vector<RelationTag> tags() const;
  // Relations joined by ';' in enum order, e.g. "k=5;n=3k+3".
  std::string format() const;

 private:
  explicit TagSet(std::bitset<kRelationTagCount> b) : bits_(b) {}
  std::bitset<kRelationTagCount> bits_;
};

const TagSet& girth8_exception_family();

// Every exception-list relation satisfied by (n, k) as given (no min-k reduction).
TagSet satisfied_tags(int n, int k);

struct ClassificationReport {
  GpParams params;
  int min_k = 0;
  int computed_girth = 0;
  int predicted_girth = 0;
  TagSet girth8_exception_tags;
  TagSet full_exception_tags;
  bool cop4_guaranteed = false;
};

ClassificationReport classify(GpParams p);

// Relation column text for the tables: the isomorphism identity
// (e.g. "2n=5k-1") when a smaller k exists, otherwise the satisfied exception relations.
std::string appendix_relation(int n, int k);

// Exact isomorphism test by refined backtracking; graphs up to 28 vertices.
bool brute_force_isomorphic(const Graph& g1, const Graph& g2);
inline constexpr std::size_t kIsomorphismVertexCap = 28;

}  // namespace copnum
