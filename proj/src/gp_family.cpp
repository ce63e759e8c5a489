#include <array>

#include "copnum/gp_family.hpp"

namespace copnum {

GpParams GpParams::make(int n, int k) {
  if (!valid(n, k)) {
    throw ParamError("invalid GP parameters (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                     "): need n >= 5 and 1 <= k < n/2");
  }
  return {n, k};
}

static int mod(int a, int n) { return ((a % n) + n) % n; }

Vertex outer_vertex(GpParams p, int i) { return static_cast<Vertex>(mod(i, p.n)); }
Vertex inner_vertex(GpParams p, int i) { return static_cast<Vertex>(p.n + mod(i, p.n)); }

Graph build_gp(GpParams p) {
  p = GpParams::make(p.n, p.k);
  std::vector<Edge> edges;
  edges.reserve(3 * static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    edges.emplace_back(outer_vertex(p, i), outer_vertex(p, i + 1));
    edges.emplace_back(outer_vertex(p, i), inner_vertex(p, i));
    edges.emplace_back(inner_vertex(p, i), inner_vertex(p, i + p.k));
  }
  return Graph::from_edge_list(2 * static_cast<std::size_t>(p.n), edges);
}

bool iso_equivalent(int n, int k, int l) {
  GpParams::make(n, k);
  GpParams::make(n, l);
  if (k == l) return true;
  int prod = mod(k * l, n);
  return prod == 1 || prod == n - 1;
}

int min_k(int n, int k) {
  GpParams::make(n, k);
  for (int l = 1; l < k; ++l) {
    if (iso_equivalent(n, k, l)) return l;
  }
  return k;
}

int predicted_girth(int n, int k) {
  const int m = min_k(n, k);
  auto is = [&](int n_coef, int k_coef, int c) { return n_coef * n == k_coef * m + c; };
  if (is(1, 3, 0)) return 3;
  if (m == 1 || is(1, 4, 0)) return 4;
  if (m == 2 || is(1, 5, 0) || is(2, 5, 0)) return 5;
  if (m == 3 || is(1, 6, 0) || is(1, 2, 2)) return 6;
  if (m == 4 || is(1, 7, 0) || is(2, 7, 0) || is(3, 7, 0) || is(1, 2, 3) || is(1, 3, 2) ||
      is(1, 3, -2)) {
    return 7;
  }
  return 8;
}

LinearRelation relation_of(RelationTag tag) {
  switch (tag) {
    case RelationTag::K1: return LinearRelation::fixed_k(1);
    case RelationTag::K2: return LinearRelation::fixed_k(2);
    case RelationTag::K3: return LinearRelation::fixed_k(3);
    case RelationTag::K4: return LinearRelation::fixed_k(4);
    case RelationTag::K5: return LinearRelation::fixed_k(5);
    case RelationTag::N2Kp2: return {1, 2, 2};
    case RelationTag::N2Kp3: return {1, 2, 3};
    case RelationTag::N2Kp4: return {1, 2, 4};
    case RelationTag::N3K: return {1, 3, 0};
    case RelationTag::N3Kp2: return {1, 3, 2};
    case RelationTag::N3Km2: return {1, 3, -2};
    case RelationTag::N3Kp3: return {1, 3, 3};
    case RelationTag::N3Km3: return {1, 3, -3};
    case RelationTag::N4K: return {1, 4, 0};
    case RelationTag::N4Kp2: return {1, 4, 2};
    case RelationTag::N4Km2: return {1, 4, -2};
    case RelationTag::N5K: return {1, 5, 0};
    case RelationTag::N5Kd2: return {2, 5, 0};
    case RelationTag::N6K: return {1, 6, 0};
    case RelationTag::N7K: return {1, 7, 0};
    case RelationTag::N7Kd2: return {2, 7, 0};
    case RelationTag::N7Kd3: return {3, 7, 0};
  }
  throw std::logic_error("unknown relation tag");
}

std::string tag_name(RelationTag tag) { return relation_of(tag).format(); }

std::vector<RelationTag> TagSet::tags() const {
  std::vector<RelationTag> out;
  for (std::size_t i = 0; i < kRelationTagCount; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<RelationTag>(i));
  }
  return out;
}

std::string TagSet::format() const {
  std::string out;
  for (auto t : tags()) {
    if (!out.empty()) out += ';';
    out += tag_name(t);
  }
  return out;
}

const TagSet& girth8_exception_family() {
  static const TagSet family{RelationTag::K5,    RelationTag::N2Kp4, RelationTag::N3Kp3,
                             RelationTag::N3Km3, RelationTag::N4Kp2, RelationTag::N4Km2};
  return family;
}

TagSet satisfied_tags(int n, int k) {
  TagSet out;
  for (std::size_t i = 0; i < kRelationTagCount; ++i) {
    auto tag = static_cast<RelationTag>(i);
    if (relation_of(tag).holds(n, k)) out.insert(tag);
  }
  return out;
}

ClassificationReport classify(GpParams p) {
  p = GpParams::make(p.n, p.k);
  ClassificationReport report;
  report.params = p;
  report.min_k = min_k(p.n, p.k);
  report.computed_girth = girth(build_gp(p)).value();
  report.predicted_girth = predicted_girth(p.n, p.k);
  report.full_exception_tags = satisfied_tags(p.n, report.min_k);
  report.girth8_exception_tags = report.full_exception_tags & girth8_exception_family();
  report.cop4_guaranteed = report.computed_girth == 8 && report.girth8_exception_tags.empty();
  return report;
}

std::string appendix_relation(int n, int k) {
  const int m = min_k(n, k);
  if (m == k) return satisfied_tags(n, k).format();
  // k*m = q*n + e with e = +-1, i.e. q*n = m*k - e.
  const int prod = k * m;
  const int e = mod(prod, n) == 1 ? 1 : -1;
  const int q = (prod - e) / n;
  return LinearRelation{q, m, -e}.format();
}

}  // namespace copnum
