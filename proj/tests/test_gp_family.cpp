#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "copnum/gp_family.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace copnum;
using namespace testing_support;

TEST_CASE("parameter validation") {
  CHECK(GpParams::valid(5, 2));
  CHECK_FALSE(GpParams::valid(4, 1));
  CHECK_FALSE(GpParams::valid(10, 5));
  CHECK_FALSE(GpParams::valid(10, 0));
  CHECK_THROWS_AS(GpParams::make(4, 1), ParamError);
  CHECK_THROWS_AS(min_k(10, 5), ParamError);
  CHECK_THROWS_AS(iso_equivalent(10, 2, 5), ParamError);
}

TEST_CASE("construction") {
  const GpParams p = GpParams::make(5, 2);
  const Graph g = build_gp(p);
  CHECK(g.vertex_count() == 10);
  CHECK(brute_force_isomorphic(g, petersen_by_hand()));
  CHECK(girth(g) == 5);
  CHECK(girth(build_gp(GpParams::make(6, 2))) == 3);
  CHECK(outer_vertex(p, 7) == 2);
  CHECK(inner_vertex(p, -1) == 9);

  for (int n = 5; n <= 40; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const GpParams q = GpParams::make(n, k);
      const Graph h = build_gp(q);
      CHECK(h.vertex_count() == static_cast<std::size_t>(2 * n));
      CHECK(h.edge_count() == static_cast<std::size_t>(3 * n));
      CHECK(h.is_regular(3));
      CHECK(is_connected(h));
      for (int i = 0; i < n; ++i) {
        CHECK(h.adjacent(outer_vertex(q, i), outer_vertex(q, i + 1)));
        CHECK(h.adjacent(outer_vertex(q, i), inner_vertex(q, i)));
        CHECK(h.adjacent(inner_vertex(q, i), inner_vertex(q, i + k)));
      }
    }
  }
}

TEST_CASE("isomorphism classes") {
  CHECK(iso_equivalent(11, 3, 4));
  CHECK(iso_equivalent(17, 7, 5));
  for (int l = 1; l < 10; ++l) CHECK_FALSE(iso_equivalent(26, 10, l));
  CHECK(min_k(7, 3) == 2);
  CHECK(min_k(17, 7) == 5);
  CHECK(min_k(25, 7) == 7);
  CHECK(min_k(14, 5) == 3);
  CHECK(min_k(31, 13) == 12);

  for (int n = 5; n <= 60; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      CHECK(iso_equivalent(n, k, k));
      const int m = min_k(n, k);
      CHECK(min_k(n, m) == m);
      CHECK(m <= k);
      for (int l = 1; 2 * l < n; ++l) CHECK(iso_equivalent(n, k, l) == iso_equivalent(n, l, k));
    }
  }
}

TEST_CASE("brute-force isomorphism oracle") {
  CHECK(brute_force_isomorphic(build_gp(GpParams::make(11, 3)), build_gp(GpParams::make(11, 4))));
  CHECK_FALSE(brute_force_isomorphic(build_gp(GpParams::make(9, 2)), build_gp(GpParams::make(9, 3))));

  std::mt19937_64 rng(3);
  const Graph g = build_gp(GpParams::make(7, 2));
  for (int t = 0; t < 10; ++t) {
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(brute_force_isomorphic(g, relabel(g, perm)));
  }
  // Same degree sequence and edge count, different structure.
  CHECK_FALSE(brute_force_isomorphic(cycle_graph(6), make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK_THROWS_AS(brute_force_isomorphic(build_gp(GpParams::make(15, 2)), build_gp(GpParams::make(15, 4))),
                  GraphError);
}

TEST_CASE("isomorphism predicate matches the oracle for n <= 10") {
  for (int n = 5; n <= 10; ++n)
    for (int k = 1; 2 * k < n; ++k)
      for (int l = k; 2 * l < n; ++l)
        CHECK(iso_equivalent(n, k, l) ==
              brute_force_isomorphic(build_gp(GpParams::make(n, k)), build_gp(GpParams::make(n, l))));
}

TEST_CASE("girth prediction") {
  CHECK(predicted_girth(28, 8) == 7);
  CHECK(predicted_girth(9, 4) == 5);
  CHECK(predicted_girth(25, 7) == 8);
  for (int n = 5; n <= 40; ++n)
    for (int k = 1; 2 * k < n; ++k) CHECK(predicted_girth(n, k) == girth(build_gp(GpParams::make(n, k))));
}

TEST_CASE("relation formatting") {
  CHECK(LinearRelation::fixed_k(5).format() == "k=5");
  CHECK(LinearRelation::fixed_n(6).format() == "n=6");
  CHECK(LinearRelation{1, 3, 3}.format() == "n=3k+3");
  CHECK(LinearRelation{2, 5, -1}.format() == "2n=5k-1");
  CHECK(LinearRelation{3, 7, 0}.format() == "n=7k/3");
  CHECK(LinearRelation{-2, -6, -6}.normalized() == LinearRelation{1, 3, 3});
  CHECK(LinearRelation{1, 4, -2}.holds(18, 5));
}

TEST_CASE("classification") {
  const auto r26 = classify(GpParams::make(26, 10));
  CHECK(r26.computed_girth == 8);
  CHECK(r26.girth8_exception_tags.empty());
  CHECK(r26.full_exception_tags.empty());
  CHECK(r26.cop4_guaranteed);

  const auto r20 = classify(GpParams::make(20, 8));
  CHECK(r20.girth8_exception_tags.contains(RelationTag::N2Kp4));
  CHECK_FALSE(r20.cop4_guaranteed);

  const auto r18 = classify(GpParams::make(18, 5));
  CHECK(r18.computed_girth == 8);
  CHECK(r18.girth8_exception_tags.contains(RelationTag::K5));
  CHECK(r18.girth8_exception_tags.contains(RelationTag::N3Kp3));
  CHECK_FALSE(r18.cop4_guaranteed);

  // Tags are read off the smallest member of the class: GP(17,7) is GP(17,5).
  const auto r17 = classify(GpParams::make(17, 7));
  CHECK(r17.min_k == 5);
  CHECK(r17.full_exception_tags.contains(RelationTag::K5));
  CHECK_FALSE(satisfied_tags(17, 7).contains(RelationTag::K5));

  for (int n = 5; n <= 40; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const auto r = classify(GpParams::make(n, k));
      CHECK(r.cop4_guaranteed == (r.computed_girth == 8 && r.girth8_exception_tags.empty()));
      CHECK((r.full_exception_tags & girth8_exception_family()) == r.girth8_exception_tags);
    }
  }
}

namespace {

std::set<std::string> relation_parts(const std::string& s) {
  std::set<std::string> out;
  for (const auto& p : split(s, ';'))
    if (!p.empty()) out.insert(p);
  return out;
}

}  // namespace

TEST_CASE("relation column against the golden appendix") {
  // Rows where the golden table omits the isomorphism to a smaller k
  // (3*4 = 1 mod 11, 13*9 = 1 mod 29, 13*7 = 1 mod 30).
  const std::set<std::pair<int, int>> missing_iso{{11, 4}, {29, 13}, {30, 13}};
  int iso_rows = 0;
  for (const auto& row : load_appendix_golden()) {
    CAPTURE(row.n);
    CAPTURE(row.k);
    const int m = min_k(row.n, row.k);
    const auto ours = relation_parts(appendix_relation(row.n, row.k));
    const auto golden = relation_parts(row.relation);
    if (missing_iso.count({row.n, row.k})) {
      CHECK(m < row.k);
      CHECK_FALSE(row.iso_min_k.has_value());
      continue;
    }
    CHECK(row.iso_min_k == (m == row.k ? std::nullopt : std::optional<int>(m)));
    if (m != row.k) {
      ++iso_rows;
      CHECK(ours == golden);
    } else {
      // The golden column names some of the satisfied relations, never one that fails.
      for (const auto& p : golden) CHECK(ours.count(p) == 1);
    }
  }
  CHECK(iso_rows > 50);
  CHECK(appendix_relation(31, 13) == "5n=12k-1");
  CHECK(appendix_relation(17, 7) == "2n=5k-1");
  CHECK(appendix_relation(14, 5) == "n=3k-1");
}
