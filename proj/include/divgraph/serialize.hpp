#ifndef DIVGRAPH_SERIALIZE_HPP
#define DIVGRAPH_SERIALIZE_HPP

#include <json.hpp>

#include "divgraph/divisor.hpp"
#include "divgraph/patterns.hpp"
#include "divgraph/realize.hpp"
#include "divgraph/verify.hpp"

namespace divgraph {

// Vertex list with side tags where present, plus edge list.
nlohmann::json graph_json(const SimpleGraph& g);

// Same, with the originating X recorded as provenance.
nlohmann::json divisor_graph_json(const SimpleGraph& g, const IntegerSet& provenance);

nlohmann::json integer_set_json(const IntegerSet& x);
nlohmann::json embedding_json(const Embedding& embedding);
nlohmann::json triangle_diagnosis_json(const TriangleDiagnosis& diagnosis);
nlohmann::json k4_diagnosis_json(const K4Diagnosis& diagnosis);
nlohmann::json inc_condition_json(const IncCondition& condition, std::size_t ell);
nlohmann::json realization_json(const RealizationResult& result);
nlohmann::json theorem_report_json(const TheoremReport& report);

// Documents behind the CLI subcommands.
nlohmann::json build_document(const IntegerSet& x);
nlohmann::json analyze_document(const IntegerSet& x);
nlohmann::json patterns_document(const IntegerSet& x);

}  // namespace divgraph

#endif  // DIVGRAPH_SERIALIZE_HPP
