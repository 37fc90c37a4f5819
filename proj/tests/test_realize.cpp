#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "divgraph/patterns.hpp"
#include "divgraph/realize.hpp"

using namespace divgraph;

namespace {

BipartitionedGraph graph_of(std::vector<Label> part1, std::vector<Label> part2,
                            std::vector<std::pair<Label, Label>> edges) {
  return make_bipartitioned_graph(std::move(part1), std::move(part2), std::move(edges));
}

// Edge-identity of B(realize(g).x) with g under the returned maps.
bool roundtrip_exact(const BipartitionedGraph& g) {
  RealizationResult result = realize(g);
  if (result.x.rho().size() != g.part1.size() ||
      result.x.xstar().size() != g.part2.size()) {
    return false;
  }
  BipartiteDivisorGraph b = build_B(result.x);
  for (const Label& v : g.part1) {
    for (const Label& u : g.part2) {
      bool want = g.has_edge(v, u);
      bool got = b.graph().has_edge(prime_label(result.prime_for(v)),
                                    number_label(result.number_for(u)));
      if (want != got) {
        return false;
      }
    }
  }
  return true;
}

BipartitionedGraph random_graph_without_isolated(std::mt19937_64& rng) {
  std::size_t m = 1 + rng() % 6;
  std::size_t n = 1 + rng() % 6;
  std::vector<Label> part1;
  std::vector<Label> part2;
  for (std::size_t i = 1; i <= m; ++i) {
    part1.push_back("v" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    part2.push_back("u" + std::to_string(j));
  }
  std::set<std::pair<Label, Label>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 2 == 0) {
        edges.emplace(part1[i], part2[j]);
      }
    }
  }
  // Repair isolated vertices with one extra incidence each.
  for (std::size_t i = 0; i < m; ++i) {
    bool covered = false;
    for (const auto& e : edges) {
      covered = covered || e.first == part1[i];
    }
    if (!covered) {
      edges.emplace(part1[i], part2[rng() % n]);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool covered = false;
    for (const auto& e : edges) {
      covered = covered || e.second == part2[j];
    }
    if (!covered) {
      edges.emplace(part1[rng() % m], part2[j]);
    }
  }
  return graph_of(part1, part2, {edges.begin(), edges.end()});
}

}  // namespace

TEST_CASE("realize: pinned examples") {
  // v1 - u1 - v2: one number divisible by two primes.
  RealizationResult path = realize(graph_of({"v1", "v2"}, {"u1"}, {{"v1", "u1"}, {"v2", "u1"}}));
  CHECK(path.x.xstar() == std::vector<BigInt>{6});
  CHECK(path.prime_for("v1") == 2);
  CHECK(path.prime_for("v2") == 3);

  // K_{2,2}: x_1 = 2*3, x_2 = 2^2 * 3^2.
  RealizationResult k22 = realize(graph_of(
      {"v1", "v2"}, {"u1", "u2"},
      {{"v1", "u1"}, {"v1", "u2"}, {"v2", "u1"}, {"v2", "u2"}}));
  CHECK(k22.x.xstar() == std::vector<BigInt>{6, 36});
  CHECK(isomorphic(build_B(k22.x).graph(), cycle_graph(4)));

  // Star with three part1 vertices: X = {30}.
  RealizationResult star = realize(
      graph_of({"v1", "v2", "v3"}, {"u1"}, {{"v1", "u1"}, {"v2", "u1"}, {"v3", "u1"}}));
  CHECK(star.x.xstar() == std::vector<BigInt>{30});
}

TEST_CASE("realize rejects isolated vertices, naming them") {
  BipartitionedGraph g = graph_of({"v1", "v2"}, {"u1"}, {{"v1", "u1"}});
  try {
    realize(g);
    FAIL("expected IsolatedVertexError");
  } catch (const IsolatedVertexError& error) {
    CHECK(error.vertex() == "v2");
  }

  BipartitionedGraph h = graph_of({"v1"}, {"u1", "u2"}, {{"v1", "u1"}});
  try {
    realize(h);
    FAIL("expected IsolatedVertexError");
  } catch (const IsolatedVertexError& error) {
    CHECK(error.vertex() == "u2");
  }
}

TEST_CASE("realize round-trips on random graphs and uses exactly its primes") {
  std::mt19937_64 rng(424242);
  for (int round = 0; round < 200; ++round) {
    BipartitionedGraph g = random_graph_without_isolated(rng);
    CAPTURE(round);
    CHECK(roundtrip_exact(g));

    RealizationResult result = realize(g);
    // rho is exactly the assigned primes and |X| = n.
    std::vector<BigInt> assigned;
    for (const auto& [label, p] : result.prime_of) {
      assigned.push_back(p);
    }
    std::sort(assigned.begin(), assigned.end());
    CHECK(result.x.rho() == assigned);
    CHECK(result.x.xstar().size() == g.part2.size());
  }
}

TEST_CASE("constructed values stay distinct even with equal neighbourhoods") {
  // Both part2 vertices see the same part1 set; exponents 1 and 2 separate.
  RealizationResult r = realize(graph_of(
      {"v1"}, {"u1", "u2"}, {{"v1", "u1"}, {"v1", "u2"}}));
  CHECK(r.x.xstar() == std::vector<BigInt>{2, 4});
}

TEST_CASE("dualize: pinned examples") {
  // X = {2,3,6}: Y = {10, 225}.
  RealizationResult dual = dualize(make_integer_set({2, 3, 6}));
  CHECK(dual.x.xstar() == std::vector<BigInt>{10, 225});
  CHECK(dual.prime_for("n:2") == 2);
  CHECK(dual.prime_for("n:3") == 3);
  CHECK(dual.prime_for("n:6") == 5);
  CHECK(dual.number_for("p:2") == 10);
  CHECK(dual.number_for("p:3") == 225);

  // X = {143, 1573}: B is a quadrilateral, the dual is {6, 36}.
  RealizationResult square = dualize(make_integer_set({143, 1573}));
  CHECK(square.x.xstar() == std::vector<BigInt>{6, 36});
  CHECK(isomorphic(build_B(square.x).graph(), cycle_graph(4)));

  // X = {105}: the reversed star realizes as {2, 4, 8}.
  RealizationResult claw = dualize(make_integer_set({105}));
  CHECK(claw.x.xstar() == std::vector<BigInt>{2, 4, 8});
}

TEST_CASE("dualize swaps Delta and Gamma edge-for-edge under the maps") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 60; ++round) {
    std::vector<BigInt> raw;
    std::size_t size = 1 + rng() % 5;
    static const int primes[] = {2, 3, 5, 7, 11};
    for (std::size_t i = 0; i < size; ++i) {
      BigInt v = 1;
      std::size_t k = 1 + rng() % 3;
      for (std::size_t f = 0; f < k; ++f) {
        v *= primes[rng() % 5];
      }
      raw.push_back(v);
    }
    IntegerSet x = make_integer_set(raw);
    RealizationResult dual = dualize(x);
    const IntegerSet& y = dual.x;

    // Delta(X) iso Gamma(Y): prime p of X maps to the number assigned to p.
    SimpleGraph delta_x = build_delta(x);
    SimpleGraph gamma_y = build_gamma(y);
    for (const BigInt& p : x.rho()) {
      for (const BigInt& q : x.rho()) {
        if (p == q) {
          continue;
        }
        bool in_delta = delta_x.has_edge(prime_label(p), prime_label(q));
        bool in_gamma = gamma_y.has_edge(number_label(dual.number_for(prime_label(p))),
                                         number_label(dual.number_for(prime_label(q))));
        CHECK(in_delta == in_gamma);
      }
    }

    // Gamma(X) iso Delta(Y): element x maps to the prime assigned to it.
    SimpleGraph gamma_x = build_gamma(x);
    SimpleGraph delta_y = build_delta(y);
    for (const BigInt& a : x.xstar()) {
      for (const BigInt& b : x.xstar()) {
        if (a == b) {
          continue;
        }
        bool in_gamma = gamma_x.has_edge(number_label(a), number_label(b));
        bool in_delta = delta_y.has_edge(prime_label(dual.prime_for(number_label(a))),
                                         prime_label(dual.prime_for(number_label(b))));
        CHECK(in_gamma == in_delta);
      }
    }

    // Dualizing twice lands on a set whose B is isomorphic to B(X).
    RealizationResult twice = dualize(y);
    CHECK(isomorphic(build_B(twice.x).graph(), build_B(x).graph()));
  }
}

TEST_CASE("bipartitioned graph validation") {
  CHECK_THROWS_AS(graph_of({}, {"u1"}, {}), ParseError);
  CHECK_THROWS_AS(graph_of({"v1"}, {}, {}), ParseError);
  CHECK_THROWS_AS(graph_of({"v1", "v1"}, {"u1"}, {}), ParseError);
  CHECK_THROWS_AS(graph_of({"v1"}, {"v1"}, {}), ParseError);
  CHECK_THROWS_AS(graph_of({"v1"}, {"u1"}, {{"u1", "v1"}}), ParseError);
  CHECK_THROWS_AS(graph_of({"v1"}, {"u1"}, {{"v1", "zz"}}), ParseError);

  // Duplicate edges collapse.
  BipartitionedGraph g = graph_of({"v1"}, {"u1"}, {{"v1", "u1"}, {"v1", "u1"}});
  CHECK(g.edges.size() == 1);
}

TEST_CASE("graph file parsing") {
  BipartitionedGraph g = parse_bipartitioned_graph(
      "# comment\n"
      "parts: v1 v2 | u1\n"
      "v1 u1\n"
      "\n"
      "v2 u1\n");
  CHECK(g.part1 == std::vector<Label>{"v1", "v2"});
  CHECK(g.part2 == std::vector<Label>{"u1"});
  CHECK(g.edges.size() == 2);

  CHECK_THROWS_AS(parse_bipartitioned_graph(""), ParseError);
  CHECK_THROWS_AS(parse_bipartitioned_graph("v1 u1\n"), ParseError);
  CHECK_THROWS_AS(parse_bipartitioned_graph("parts: v1 u1\n"), ParseError);
  CHECK_THROWS_AS(parse_bipartitioned_graph("parts: v1 | u1\nv1 u1 extra\n"), ParseError);
  CHECK_THROWS_AS(parse_bipartitioned_graph("parts: v1 | u1 | w1\n"), ParseError);
}
