#include "divgraph/serialize.hpp"

namespace divgraph {

using nlohmann::json;

namespace {

json values_json(const std::vector<BigInt>& values) {
  json array = json::array();
  for (const BigInt& v : values) {
    array.push_back(v.str());
  }
  return array;
}

}  // namespace

json graph_json(const SimpleGraph& g) {
  json vertices = json::array();
  for (const Label& label : g.vertices()) {
    json vertex = {{"id", label}};
    auto side = label_side(label);
    if (side == Side::Primes) {
      vertex["tag"] = "prime";
      vertex["value"] = label_value(label).str();
    } else if (side == Side::Numbers) {
      vertex["tag"] = "number";
      vertex["value"] = label_value(label).str();
    }
    vertices.push_back(std::move(vertex));
  }
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back({u, v});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

json divisor_graph_json(const SimpleGraph& g, const IntegerSet& provenance) {
  json doc = graph_json(g);
  doc["provenance"] = {{"x", values_json(provenance.elements())}};
  return doc;
}

json integer_set_json(const IntegerSet& x) {
  return {{"elements", values_json(x.elements())},
          {"xstar", values_json(x.xstar())},
          {"rho", values_json(x.rho())}};
}

json embedding_json(const Embedding& embedding) {
  json map = json::object();
  for (const auto& [pattern_vertex, host_vertex] : embedding.map) {
    map[pattern_vertex] = host_vertex;
  }
  return {{"map", map}, {"induced", embedding.induced}};
}

json triangle_diagnosis_json(const TriangleDiagnosis& diagnosis) {
  const char* kind = diagnosis.witness_kind == TriangleWitnessKind::InducedC6
                         ? "InducedC6"
                         : (diagnosis.witness_kind == TriangleWitnessKind::InducedK13
                                ? "InducedK13"
                                : "None");
  json doc = {{"triangle_delta", diagnosis.has_triangle_delta},
              {"triangle_gamma", diagnosis.has_triangle_gamma},
              {"witness_kind", kind},
              {"witness", nullptr}};
  if (diagnosis.witness) {
    doc["witness"] = embedding_json(*diagnosis.witness);
  }
  return doc;
}

json k4_diagnosis_json(const K4Diagnosis& diagnosis) {
  json patterns = json::object();
  for (const auto& [name, embedding] : diagnosis.b_patterns_found) {
    patterns[pattern_name_string(name)] = embedding_json(embedding);
  }
  return {{"delta_k4",
           diagnosis.delta_k4 ? values_json(*diagnosis.delta_k4) : json(nullptr)},
          {"gamma_k4",
           diagnosis.gamma_k4 ? values_json(*diagnosis.gamma_k4) : json(nullptr)},
          {"b_patterns", patterns}};
}

json inc_condition_json(const IncCondition& condition, std::size_t ell) {
  json doc = {{"ell", ell},
              {"route", condition.route == IncRoute::Gamma
                            ? "Gamma"
                            : (condition.route == IncRoute::Delta ? "Delta" : "Fails")}};
  if (condition.witness) {
    doc["clique"] = values_json(condition.witness->clique);
    json rows = json::array();
    for (const auto& [a, b, representative] : condition.witness->assignment) {
      rows.push_back({a.str(), b.str(), representative.str()});
    }
    doc["assignment"] = rows;
  }
  return doc;
}

json realization_json(const RealizationResult& result) {
  json prime_of = json::object();
  for (const auto& [label, p] : result.prime_of) {
    prime_of[label] = p.str();
  }
  json number_of = json::object();
  for (const auto& [label, x] : result.number_of) {
    number_of[label] = x.str();
  }
  return {{"x", values_json(result.x.elements())},
          {"prime_of", prime_of},
          {"number_of", number_of}};
}

json theorem_report_json(const TheoremReport& report) {
  return {{"theorem", theorem_id_string(report.id)},
          {"passed", report.passed},
          {"detail", report.detail}};
}

json build_document(const IntegerSet& x) {
  BipartiteDivisorGraph b = build_B(x);
  return {{"x", integer_set_json(x)},
          {"B", divisor_graph_json(b.graph(), x)},
          {"delta", divisor_graph_json(build_delta(x), x)},
          {"gamma", divisor_graph_json(build_gamma(x), x)}};
}

namespace {

json optional_json(const std::optional<std::size_t>& value) {
  if (!value) {
    return nullptr;
  }
  return *value;
}

}  // namespace

json analyze_document(const IntegerSet& x) {
  BipartiteDivisorGraph b = build_B(x);
  SimpleGraph delta = build_delta(x);
  SimpleGraph gamma = build_gamma(x);
  return {{"x", integer_set_json(x)},
          {"components",
           {{"B", components(b.graph()).size()},
            {"delta", components(delta).size()},
            {"gamma", components(gamma).size()}}},
          {"diameter",
           {{"B", optional_json(diameter(b.graph()))},
            {"delta", optional_json(diameter(delta))},
            {"gamma", optional_json(diameter(gamma))}}},
          // null girth means acyclic; null girth_gt4 means no cycle longer
          // than four vertices exists.
          {"girth",
           {{"B", optional_json(girth(b.graph()))},
            {"delta", optional_json(girth(delta))},
            {"gamma", optional_json(girth(gamma))}}},
          {"girth_gt4", {{"B", optional_json(girth_gt4(b.graph()))}}}};
}

json patterns_document(const IntegerSet& x) {
  return {{"x", integer_set_json(x)},
          {"triangles", triangle_diagnosis_json(diagnose_triangles(x))},
          {"k4", k4_diagnosis_json(diagnose_k4(x))}};
}

}  // namespace divgraph
