#include "divgraph/divgraph.h"

#include <cstring>
#include <sstream>
#include <string>

#include "divgraph/serialize.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

dg_status fail(dg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps the C++ error hierarchy onto status codes.
template <typename Callable>
dg_status guarded(Callable&& body) {
  try {
    return body();
  } catch (const divgraph::EmptyOrTrivialError& error) {
    return fail(DG_ERROR_EMPTY_OR_TRIVIAL, error.what());
  } catch (const divgraph::BudgetExceededError& error) {
    return fail(DG_ERROR_BUDGET_EXCEEDED, error.what());
  } catch (const divgraph::IsolatedVertexError& error) {
    return fail(DG_ERROR_ISOLATED_VERTEX, error.what());
  } catch (const divgraph::UnknownVertexError& error) {
    return fail(DG_ERROR_UNKNOWN_VERTEX, error.what());
  } catch (const divgraph::ParseError& error) {
    return fail(DG_ERROR_PARSE, error.what());
  } catch (const std::invalid_argument& error) {
    return fail(DG_ERROR_INVALID_ARGUMENT, error.what());
  } catch (const std::exception& error) {
    return fail(DG_ERROR_INTERNAL, error.what());
  }
}

std::vector<divgraph::BigInt> parse_integer_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') {
      c = ' ';
    }
  }
  std::istringstream stream(normalized);
  std::vector<divgraph::BigInt> values;
  std::string token;
  while (stream >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw divgraph::ParseError("'" + token + "' is not a positive decimal integer");
    }
    divgraph::BigInt value(token);
    if (value < 1) {
      throw divgraph::ParseError("'" + token + "' is not a positive integer");
    }
    values.push_back(std::move(value));
  }
  if (values.empty()) {
    throw divgraph::EmptyOrTrivialError("no integers supplied");
  }
  return values;
}

std::vector<std::size_t> ell_list(const uint32_t* ells, size_t ell_count) {
  if (ells == nullptr || ell_count == 0) {
    return {3, 4};
  }
  std::vector<std::size_t> values;
  values.reserve(ell_count);
  for (size_t i = 0; i < ell_count; ++i) {
    if (ells[i] < 2) {
      throw std::invalid_argument("ell values must be at least 2");
    }
    values.push_back(ells[i]);
  }
  return values;
}

}  // namespace

struct dg_integer_set {
  divgraph::IntegerSet value;
};

struct dg_bigraph {
  divgraph::BipartitionedGraph value;
};

extern "C" {

const char* dg_status_name(dg_status status) {
  switch (status) {
    case DG_OK:
      return "DG_OK";
    case DG_ERROR_PARSE:
      return "DG_ERROR_PARSE";
    case DG_ERROR_EMPTY_OR_TRIVIAL:
      return "DG_ERROR_EMPTY_OR_TRIVIAL";
    case DG_ERROR_BUDGET_EXCEEDED:
      return "DG_ERROR_BUDGET_EXCEEDED";
    case DG_ERROR_ISOLATED_VERTEX:
      return "DG_ERROR_ISOLATED_VERTEX";
    case DG_ERROR_UNKNOWN_VERTEX:
      return "DG_ERROR_UNKNOWN_VERTEX";
    case DG_ERROR_INVALID_ARGUMENT:
      return "DG_ERROR_INVALID_ARGUMENT";
    case DG_ERROR_INTERNAL:
      return "DG_ERROR_INTERNAL";
  }
  return "DG_ERROR_INTERNAL";
}

const char* dg_last_error(void) { return g_last_error.c_str(); }

void dg_string_free(char* text) { delete[] text; }

dg_status dg_integer_set_parse(const char* text, dg_integer_set** out) {
  if (text == nullptr || out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto values = parse_integer_list(text);
    *out = new dg_integer_set{divgraph::make_integer_set(values)};
    return DG_OK;
  });
}

void dg_integer_set_free(dg_integer_set* set) { delete set; }

dg_status dg_build_json(const dg_integer_set* set, char** json_out) {
  if (set == nullptr || json_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *json_out = copy_string(divgraph::build_document(set->value).dump());
    return DG_OK;
  });
}

dg_status dg_graph_dot(const dg_integer_set* set, const char* which, char** dot_out) {
  if (set == nullptr || which == nullptr || dot_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::string name(which);
    divgraph::SimpleGraph graph;
    if (name == "B") {
      graph = divgraph::build_B(set->value).graph();
    } else if (name == "delta") {
      graph = divgraph::build_delta(set->value);
    } else if (name == "gamma") {
      graph = divgraph::build_gamma(set->value);
    } else {
      throw std::invalid_argument("unknown graph '" + name + "': expected B, delta or gamma");
    }
    *dot_out = copy_string(divgraph::to_dot(graph, "divgraph"));
    return DG_OK;
  });
}

dg_status dg_analyze_json(const dg_integer_set* set, char** json_out) {
  if (set == nullptr || json_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *json_out = copy_string(divgraph::analyze_document(set->value).dump());
    return DG_OK;
  });
}

dg_status dg_patterns_json(const dg_integer_set* set, char** json_out) {
  if (set == nullptr || json_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *json_out = copy_string(divgraph::patterns_document(set->value).dump());
    return DG_OK;
  });
}

dg_status dg_dualize_json(const dg_integer_set* set, char** json_out) {
  if (set == nullptr || json_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    nlohmann::json doc = divgraph::realization_json(divgraph::dualize(set->value));
    doc["y"] = doc["x"];
    doc.erase("x");
    doc["input"] = divgraph::integer_set_json(set->value);
    *json_out = copy_string(doc.dump());
    return DG_OK;
  });
}

dg_status dg_verify_json(const dg_integer_set* set, const uint32_t* ells, size_t ell_count,
                         int* all_passed, char** jsonl_out) {
  if (set == nullptr || all_passed == nullptr || jsonl_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto reports = divgraph::verify_all(set->value, ell_list(ells, ell_count));
    std::ostringstream lines;
    bool ok = true;
    for (const auto& report : reports) {
      ok = ok && report.passed;
      lines << divgraph::theorem_report_json(report).dump() << "\n";
    }
    *all_passed = ok ? 1 : 0;
    *jsonl_out = copy_string(lines.str());
    return DG_OK;
  });
}

dg_status dg_bigraph_parse(const char* text, dg_bigraph** out) {
  if (text == nullptr || out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new dg_bigraph{divgraph::parse_bipartitioned_graph(text)};
    return DG_OK;
  });
}

void dg_bigraph_free(dg_bigraph* graph) { delete graph; }

dg_status dg_realize_json(const dg_bigraph* graph, char** json_out) {
  if (graph == nullptr || json_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *json_out = copy_string(divgraph::realization_json(divgraph::realize(graph->value)).dump());
    return DG_OK;
  });
}

dg_status dg_fuzz_json(uint64_t trials, uint64_t seed, uint32_t max_set_size,
                       uint64_t max_element, const uint32_t* ells, size_t ell_count,
                       int all_reports, int* all_passed, char** jsonl_out) {
  if (all_passed == nullptr || jsonl_out == nullptr) {
    return fail(DG_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    divgraph::FuzzConfig config;
    config.trials = trials;
    config.seed = seed;
    if (max_set_size > 0) {
      config.max_set_size = max_set_size;
    }
    if (max_element > 0) {
      config.max_element = max_element;
    }
    config.ell_values = ell_list(ells, ell_count);

    auto reports = divgraph::fuzz(config);
    std::size_t failures = 0;
    std::ostringstream lines;
    for (const auto& report : reports) {
      if (!report.passed) {
        ++failures;
      }
      if (all_reports != 0 || !report.passed) {
        lines << divgraph::theorem_report_json(report).dump() << "\n";
      }
    }
    nlohmann::json summary = {{"summary",
                               {{"trials", trials},
                                {"seed", seed},
                                {"reports", reports.size()},
                                {"failures", failures}}}};
    lines << summary.dump() << "\n";
    *all_passed = failures == 0 ? 1 : 0;
    *jsonl_out = copy_string(lines.str());
    return DG_OK;
  });
}

}  // extern "C"
