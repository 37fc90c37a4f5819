#include "divgraph/realize.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace divgraph {

bool BipartitionedGraph::has_edge(const Label& v, const Label& u) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(v, u)) != edges.end();
}

BipartitionedGraph make_bipartitioned_graph(std::vector<Label> part1, std::vector<Label> part2,
                                            std::vector<std::pair<Label, Label>> edges) {
  if (part1.empty()) {
    throw ParseError("bipartitioned graph: part 1 is empty");
  }
  if (part2.empty()) {
    throw ParseError("bipartitioned graph: part 2 is empty");
  }
  std::unordered_set<Label> seen1;
  for (const Label& v : part1) {
    if (!seen1.insert(v).second) {
      throw ParseError("bipartitioned graph: duplicate vertex '" + v + "' in part 1");
    }
  }
  std::unordered_set<Label> seen2;
  for (const Label& u : part2) {
    if (seen1.count(u) != 0) {
      throw ParseError("bipartitioned graph: vertex '" + u + "' appears in both parts");
    }
    if (!seen2.insert(u).second) {
      throw ParseError("bipartitioned graph: duplicate vertex '" + u + "' in part 2");
    }
  }

  std::vector<std::pair<Label, Label>> unique_edges;
  std::set<std::pair<Label, Label>> edge_set;
  for (auto& edge : edges) {
    if (seen1.count(edge.first) == 0) {
      throw ParseError("bipartitioned graph: edge endpoint '" + edge.first +
                       "' is not in part 1");
    }
    if (seen2.count(edge.second) == 0) {
      throw ParseError("bipartitioned graph: edge endpoint '" + edge.second +
                       "' is not in part 2");
    }
    if (edge_set.insert(edge).second) {
      unique_edges.push_back(std::move(edge));
    }
  }

  BipartitionedGraph g;
  g.part1 = std::move(part1);
  g.part2 = std::move(part2);
  g.edges = std::move(unique_edges);
  return g;
}

BipartitionedGraph parse_bipartitioned_graph(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  std::vector<Label> part1;
  std::vector<Label> part2;
  std::vector<std::pair<Label, Label>> edges;
  bool header_seen = false;

  while (std::getline(stream, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#') {
      continue;
    }
    if (!header_seen) {
      if (first != "parts:") {
        throw ParseError("graph file must start with a 'parts:' line, found '" + first + "'");
      }
      bool after_bar = false;
      std::string token;
      while (tokens >> token) {
        if (token == "|") {
          if (after_bar) {
            throw ParseError("graph file: more than one '|' in the parts line");
          }
          after_bar = true;
        } else if (after_bar) {
          part2.push_back(token);
        } else {
          part1.push_back(token);
        }
      }
      if (!after_bar) {
        throw ParseError("graph file: parts line is missing the '|' separator");
      }
      header_seen = true;
      continue;
    }
    std::string second;
    std::string extra;
    if (!(tokens >> second) || (tokens >> extra)) {
      throw ParseError("graph file: expected 'v u' edge line, found '" + line + "'");
    }
    edges.emplace_back(first, second);
  }
  if (!header_seen) {
    throw ParseError("graph file is empty");
  }
  return make_bipartitioned_graph(std::move(part1), std::move(part2), std::move(edges));
}

const BigInt& RealizationResult::prime_for(const Label& v) const {
  for (const auto& [label, p] : prime_of) {
    if (label == v) {
      return p;
    }
  }
  throw UnknownVertexError("no prime assigned to '" + v + "'");
}

const BigInt& RealizationResult::number_for(const Label& u) const {
  for (const auto& [label, x] : number_of) {
    if (label == u) {
      return x;
    }
  }
  throw UnknownVertexError("no number assigned to '" + u + "'");
}

RealizationResult realize(const BipartitionedGraph& g) {
  std::unordered_map<Label, std::size_t> part1_pos;
  for (std::size_t i = 0; i < g.part1.size(); ++i) {
    part1_pos.emplace(g.part1[i], i);
  }

  std::vector<std::vector<std::size_t>> incident(g.part2.size());
  std::vector<char> part1_covered(g.part1.size(), 0);
  std::unordered_map<Label, std::size_t> part2_pos;
  for (std::size_t j = 0; j < g.part2.size(); ++j) {
    part2_pos.emplace(g.part2[j], j);
  }
  for (const auto& [v, u] : g.edges) {
    std::size_t l = part1_pos.at(v);
    std::size_t j = part2_pos.at(u);
    incident[j].push_back(l);
    part1_covered[l] = 1;
  }

  for (std::size_t i = 0; i < g.part1.size(); ++i) {
    if (!part1_covered[i]) {
      throw IsolatedVertexError(g.part1[i],
                                "cannot realize: vertex '" + g.part1[i] + "' is isolated");
    }
  }
  for (std::size_t j = 0; j < g.part2.size(); ++j) {
    if (incident[j].empty()) {
      throw IsolatedVertexError(g.part2[j],
                                "cannot realize: vertex '" + g.part2[j] + "' is isolated");
    }
  }

  std::vector<BigInt> primes = first_primes(g.part1.size());

  // x_j = product over incident part1 positions l of p_l^j, 1-based j.
  std::vector<BigInt> values;
  values.reserve(g.part2.size());
  for (std::size_t j = 0; j < g.part2.size(); ++j) {
    BigInt x_j = 1;
    for (std::size_t l : incident[j]) {
      x_j *= ipow(primes[l], j + 1);
    }
    values.push_back(x_j);
  }

  // Distinct supports give distinct products; equal supports are separated
  // by the exponent.
  std::set<BigInt> distinct(values.begin(), values.end());
  if (distinct.size() != values.size()) {
    throw std::logic_error("realize: constructed values are not pairwise distinct");
  }

  RealizationResult result{make_integer_set(values), {}, {}};
  for (std::size_t i = 0; i < g.part1.size(); ++i) {
    result.prime_of.emplace_back(g.part1[i], primes[i]);
  }
  for (std::size_t j = 0; j < g.part2.size(); ++j) {
    result.number_of.emplace_back(g.part2[j], values[j]);
  }
  return result;
}

RealizationResult dualize(const IntegerSet& x) {
  // The reverse bipartition of B(x): X* becomes the prime-receiving part.
  std::vector<Label> part1;
  for (const BigInt& value : x.xstar()) {
    part1.push_back(number_label(value));
  }
  std::vector<Label> part2;
  for (const BigInt& p : x.rho()) {
    part2.push_back(prime_label(p));
  }
  std::vector<std::pair<Label, Label>> edges;
  for (const BigInt& value : x.xstar()) {
    for (const BigInt& p : x.factorization_of(value).support()) {
      edges.emplace_back(number_label(value), prime_label(p));
    }
  }
  return realize(make_bipartitioned_graph(std::move(part1), std::move(part2), std::move(edges)));
}

}  // namespace divgraph
