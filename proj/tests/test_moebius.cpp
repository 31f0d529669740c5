#include <doctest.h>

#include <algorithm>
#include <set>

#include "quatwick/moebius.hpp"
#include "quatwick/moments.hpp"

using namespace quatwick;

namespace {

MoebiusGraph make(DegreeSeq deg, std::vector<std::pair<int, int>> edges, std::vector<std::uint8_t> tw) {
  MoebiusGraph g;
  g.degrees = std::move(deg);
  g.edges = std::move(edges);
  g.twisted = std::move(tw);
  return g;
}

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("single degree-two vertex") {
  const auto graphs = enumerate_graphs({2});
  REQUIRE(graphs.size() == 2);
  std::multiset<int> chis;
  for (const auto& g : graphs) chis.insert(analyze(g).chi);
  CHECK(chis == std::multiset<int>{1, 2});
  CHECK(graphs[0].twisted[0] == 0);
  CHECK(face_count(graphs[0]) == 2);
  CHECK(face_count(graphs[1]) == 1);
}

TEST_CASE("two degree-one vertices") {
  const auto graphs = enumerate_graphs({1, 1});
  REQUIRE(graphs.size() == 2);
  for (const auto& g : graphs) {
    CHECK(face_count(g) == 1);
    CHECK(analyze(g).chi == 2);
  }
}

TEST_CASE("colors restrict the matching") {
  CHECK(enumerate_graphs({2}, ColorMap{1, 2}).empty());
  CHECK(enumerate_graphs({2}, ColorMap{2, 2}).size() == 2);
  // Each color class pairs internally: 1 matching for (1,2,1,2) -> 1*1 matchings, 4 twists.
  CHECK(enumerate_graphs({4}, ColorMap{1, 2, 1, 2}).size() == 4);
  CHECK_THROWS_AS(enumerate_graphs({2}, ColorMap{1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs({2}, ColorMap{0, 1}), std::invalid_argument);
}

TEST_CASE("odd total degree and bounds") {
  CHECK(enumerate_graphs({3}).empty());
  CHECK(enumerate_graphs({1, 2}).empty());
  CHECK_THROWS_AS(enumerate_graphs({14}), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_graphs({0, 2}), std::invalid_argument);
}

TEST_CASE("face classes follow the slot rule") {
  const auto untwisted = make({2}, {{0, 1}}, {0});
  const auto fc = faces(untwisted);
  CHECK(fc.f == 2);
  CHECK(fc.classes.count == 2);
  CHECK(fc.classes.label[0] != fc.classes.label[1]);
  const auto twisted = make({2}, {{0, 1}}, {1});
  CHECK(faces(twisted).f == 1);
  CHECK(face_count(make({1, 1}, {{0, 1}}, {0})) == 1);
  CHECK(face_count(make({1, 1}, {{0, 1}}, {1})) == 1);
}

TEST_CASE("components") {
  const auto pairs = make({1, 1, 1, 1}, {{0, 1}, {2, 3}}, {0, 0});
  const auto s = analyze(pairs);
  CHECK(s.component_count == 2);
  CHECK(s.chi == 4);
  CHECK(s.component_chi == std::vector<int>{2, 2});
  CHECK(components(make({2}, {{0, 1}}, {0})).size() == 1);
  // deg (2,2), half-edges 0,1 | 2,3, cross pairing.
  CHECK(components(make({2, 2}, {{0, 2}, {1, 3}}, {0, 1})).size() == 1);
}

TEST_CASE("graphs from words") {
  const Factor Z = Factor::z(1), Zb = Factor::zbar(1);
  const MomentExpr a({{Z, Zb}});
  const auto ga = graphs_from_words(a, enumerate_wick_pairings(a).at(0));
  CHECK(ga.twisted == std::vector<std::uint8_t>{0});
  CHECK(analyze(ga).chi == 2);
  const MomentExpr b({{Z, Z}});
  const auto gb = graphs_from_words(b, enumerate_wick_pairings(b).at(0));
  CHECK(gb.twisted == std::vector<std::uint8_t>{1});
  CHECK(analyze(gb).chi == 1);
  const MomentExpr c({{Z}, {Z}});
  const auto gc = graphs_from_words(c, enumerate_wick_pairings(c).at(0));
  CHECK(gc.vertex_count() == 2);
  CHECK(analyze(gc).chi == 2);
  // Empty words are dropped.
  const MomentExpr d({{}, {Z, Zb}});
  CHECK(graphs_from_words(d, enumerate_wick_pairings(d).at(0)).vertex_count() == 1);
}

TEST_CASE("census invariants and the boundary walk up to total degree eight") {
  for (int total = 2; total <= 8; total += 2) {
    for (const auto& deg : compositions(total)) {
      const int n = total / 2, m = static_cast<int>(deg.size());
      Integer count = 0;
      for_each_graph(deg, std::nullopt, [&](const MoebiusGraph& g) {
        ++count;
        const auto s = analyze(g);
        REQUIRE(s.chi == m - n + s.f);
        REQUIRE(s.f >= 1);
        REQUIRE(s.chi <= 2 * s.component_count);
        int sum = 0;
        for (int c : s.component_chi) {
          REQUIRE(c <= 2);
          sum += c;
        }
        REQUIRE(sum == s.chi);
        REQUIRE(boundary_walk_faces(g) == s.f);
      });
      REQUIRE(count == census_size(total));
    }
  }
}

TEST_CASE("census size formula") {
  CHECK(census_size(2) == 2);
  CHECK(census_size(4) == 12);
  CHECK(census_size(6) == 120);
  CHECK(census_size(10) == Integer(945) * 32);
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = enumerate_graphs({2, 2});
  const auto b = enumerate_graphs({2, 2});
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].edges == b[k].edges);
    CHECK(a[k].twisted == b[k].twisted);
  }
  // Twist flags count in binary with bit e belonging to edge e.
  CHECK(a[0].twisted == std::vector<std::uint8_t>{0, 0});
  CHECK(a[1].twisted == std::vector<std::uint8_t>{1, 0});
  CHECK(a[2].twisted == std::vector<std::uint8_t>{0, 1});
  CHECK(a[0].edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

}
