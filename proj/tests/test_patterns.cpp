#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "divgraph/patterns.hpp"

using namespace divgraph;

namespace {

IntegerSet set_of(std::initializer_list<long long> values) {
  std::vector<BigInt> raw;
  for (long long v : values) {
    raw.emplace_back(v);
  }
  return make_integer_set(raw);
}

std::vector<std::size_t> sorted_degrees(const SimpleGraph& g) {
  std::vector<std::size_t> degrees;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    degrees.push_back(g.degree(v));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::size_t> side_degrees(const SimpleGraph& g, Side side) {
  std::vector<std::size_t> degrees;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (label_side(g.label_of(v)) == side) {
      degrees.push_back(g.degree(v));
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

TEST_CASE("incidence_graph: pinned examples") {
  CHECK(isomorphic(incidence_graph(complete_graph(2)), path_graph(3)));
  CHECK(isomorphic(incidence_graph(complete_graph(3)), cycle_graph(6)));

  SimpleGraph inc4 = incidence_graph(complete_graph(4));
  CHECK(inc4.vertex_count() == 10);
  CHECK(inc4.edge_count() == 12);
  CHECK(sorted_degrees(inc4) == std::vector<std::size_t>{2, 2, 2, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("line_graph: pinned examples") {
  CHECK(isomorphic(line_graph(path_graph(3)), complete_graph(2)));
  CHECK(isomorphic(line_graph(complete_bipartite(1, 3)), complete_graph(3)));

  SimpleGraph lk4 = line_graph(complete_graph(4));
  CHECK(lk4.vertex_count() == 6);
  CHECK(sorted_degrees(lk4) == std::vector<std::size_t>(6, 4));
  CHECK(isomorphic(lk4, catalog(PatternName::LK4)));
}

TEST_CASE("catalog shapes") {
  SimpleGraph script_k = catalog(PatternName::ScriptK);
  CHECK(script_k.vertex_count() == 7);
  CHECK(script_k.edge_count() == 8);
  CHECK(side_degrees(script_k, Side::Primes) == std::vector<std::size_t>{2, 3, 3});
  CHECK(side_degrees(script_k, Side::Numbers) == std::vector<std::size_t>{2, 2, 2, 2});

  SimpleGraph script_g = catalog(PatternName::ScriptG);
  CHECK(script_g.vertex_count() == 8);
  CHECK(script_g.edge_count() == 9);
  CHECK(side_degrees(script_g, Side::Primes) == std::vector<std::size_t>{2, 2, 2, 3});
  CHECK(side_degrees(script_g, Side::Numbers) == std::vector<std::size_t>{2, 2, 2, 3});

  CHECK(isomorphic(catalog(PatternName::IncK3), cycle_graph(6)));
  CHECK(catalog(PatternName::K14Right).vertex_count() == 5);
  CHECK(catalog(PatternName::K41Right).vertex_count() == 5);
}

TEST_CASE("catalog graphs match their defining integer sets") {
  CHECK(isomorphic(build_B(set_of({6, 12, 10, 15})).graph(), catalog(PatternName::ScriptK)));
  CHECK(isomorphic(build_B(set_of({6, 10, 14, 105})).graph(), catalog(PatternName::ScriptG)));
  // The flipped-orientation generating set for ScriptK.
  CHECK(isomorphic(build_B(set_of({30, 14, 105})).graph(), catalog(PatternName::ScriptK)));
}

TEST_CASE("oriented embedding respects side tags") {
  BipartiteDivisorGraph towers_b = build_B(set_of({2, 4, 8, 16}));  // 1 prime, 4 numbers
  const SimpleGraph& towers = towers_b.graph();
  CHECK(find_tagged(towers, catalog(PatternName::K14Right), false).has_value());
  CHECK_FALSE(find_tagged(towers, catalog(PatternName::K41Right), false).has_value());
  // Flipping lets the same star match the other orientation.
  CHECK(find_tagged(towers, catalog(PatternName::K41Right), true).has_value());

  BipartiteDivisorGraph bouquet_b = build_B(set_of({210}));  // 4 primes, 1 number
  const SimpleGraph& bouquet = bouquet_b.graph();
  CHECK(find_tagged(bouquet, catalog(PatternName::K41Right), false).has_value());
  CHECK_FALSE(find_tagged(bouquet, catalog(PatternName::K14Right), false).has_value());
}

TEST_CASE("oriented_isomorphic distinguishes the two star orientations") {
  BipartiteDivisorGraph claw_b = build_B(set_of({2, 4, 8}));
  const SimpleGraph& claw = claw_b.graph();
  CHECK(oriented_isomorphic(claw, oriented_complete_bipartite(1, 3)));
  CHECK_FALSE(oriented_isomorphic(claw, oriented_complete_bipartite(3, 1)));
  CHECK(isomorphic(oriented_complete_bipartite(1, 3), oriented_complete_bipartite(3, 1)));
}

TEST_CASE("diagnose_triangles: pinned examples") {
  TriangleDiagnosis towers = diagnose_triangles(set_of({2, 4, 8}));
  CHECK_FALSE(towers.has_triangle_delta);
  CHECK(towers.has_triangle_gamma);
  CHECK(towers.witness_kind == TriangleWitnessKind::InducedK13);
  REQUIRE(towers.witness.has_value());
  CHECK(towers.witness->map.at("a1") == "p:2");

  TriangleDiagnosis hexagon = diagnose_triangles(set_of({6, 10, 15}));
  CHECK(hexagon.has_triangle_delta);
  CHECK(hexagon.has_triangle_gamma);
  CHECK(hexagon.witness_kind == TriangleWitnessKind::InducedC6);

  TriangleDiagnosis none = diagnose_triangles(set_of({2, 10}));
  CHECK_FALSE(none.has_triangle_delta);
  CHECK_FALSE(none.has_triangle_gamma);
  CHECK(none.witness_kind == TriangleWitnessKind::None);
  CHECK_FALSE(none.witness.has_value());
}

TEST_CASE("check_inc_condition: pinned examples") {
  // All six pairwise products of 2,3,5,7: Delta route with distinct x_ij.
  IncCondition via_delta = check_inc_condition(set_of({6, 10, 14, 15, 21, 35}), 4);
  CHECK(via_delta.route == IncRoute::Delta);
  REQUIRE(via_delta.witness.has_value());
  CHECK(via_delta.witness->clique == std::vector<BigInt>{2, 3, 5, 7});
  CHECK(via_delta.witness->assignment.size() == 6);
  // Representatives are pairwise distinct and divisible by both primes.
  std::vector<BigInt> representatives;
  for (const auto& [a, b, rep] : via_delta.witness->assignment) {
    CHECK(rep % a == 0);
    CHECK(rep % b == 0);
    representatives.push_back(rep);
  }
  std::sort(representatives.begin(), representatives.end());
  CHECK(std::adjacent_find(representatives.begin(), representatives.end()) ==
        representatives.end());

  // Prime towers: every pair shares only the prime 2, no SDR.
  CHECK(check_inc_condition(set_of({2, 4, 8}), 3).route == IncRoute::Fails);

  // {30, 154, 273, 715}: Gamma route.
  IncCondition via_gamma = check_inc_condition(set_of({30, 154, 273, 715}), 4);
  CHECK(via_gamma.route == IncRoute::Gamma);
  REQUIRE(via_gamma.witness.has_value());
  for (const auto& [a, b, rep] : via_gamma.witness->assignment) {
    CHECK(a % rep == 0);
    CHECK(b % rep == 0);
  }
}

TEST_CASE("diagnose_k4: pinned examples") {
  K4Diagnosis towers = diagnose_k4(set_of({2, 4, 8, 16}));
  CHECK_FALSE(towers.delta_k4.has_value());
  REQUIRE(towers.gamma_k4.has_value());
  CHECK(*towers.gamma_k4 == std::vector<BigInt>{2, 4, 8, 16});
  CHECK(towers.b_patterns_found.count(PatternName::K14Right) == 1);
  CHECK(towers.b_patterns_found.count(PatternName::K41Right) == 0);

  K4Diagnosis bouquet = diagnose_k4(set_of({210}));
  REQUIRE(bouquet.delta_k4.has_value());
  CHECK(*bouquet.delta_k4 == std::vector<BigInt>{2, 3, 5, 7});
  CHECK_FALSE(bouquet.gamma_k4.has_value());
  CHECK(bouquet.b_patterns_found.count(PatternName::K41Right) == 1);

  K4Diagnosis both = diagnose_k4(set_of({6, 10, 14, 105}));
  CHECK(both.delta_k4.has_value());
  CHECK(both.gamma_k4.has_value());
  CHECK(both.b_patterns_found.count(PatternName::ScriptG) == 1);

  K4Diagnosis nothing = diagnose_k4(set_of({2, 10}));
  CHECK_FALSE(nothing.delta_k4.has_value());
  CHECK_FALSE(nothing.gamma_k4.has_value());
  CHECK(nothing.b_patterns_found.empty());
}

TEST_CASE("K13 star witnesses coincide with degree-3 vertices of B") {
  for (auto values : {std::initializer_list<long long>{2, 4, 8},
                      std::initializer_list<long long>{30},
                      std::initializer_list<long long>{6, 10, 15},
                      std::initializer_list<long long>{2, 10}}) {
    IntegerSet x = set_of(values);
    BipartiteDivisorGraph bx = build_B(x);
    const SimpleGraph& b = bx.graph();
    bool has_degree3 = false;
    for (std::size_t v = 0; v < b.vertex_count(); ++v) {
      has_degree3 = has_degree3 || b.degree(v) >= 3;
    }
    CHECK(has_degree3 == find_subgraph(b, catalog(PatternName::K13), true).has_value());
  }
}

TEST_CASE("line and incidence generators do not depend on label text") {
  SimpleGraph g;
  g.add_edge("alpha", "beta");
  g.add_edge("beta", "gamma");
  CHECK(isomorphic(incidence_graph(g), path_graph(5)));
  CHECK(isomorphic(line_graph(g), path_graph(2)));
}

TEST_CASE("pattern name strings") {
  CHECK(std::string(pattern_name_string(PatternName::K14Right)) == "K14right");
  CHECK(std::string(pattern_name_string(PatternName::ScriptK)) == "ScriptK");
  CHECK(std::string(pattern_name_string(PatternName::IncK4)) == "IncK4");
}
