// Command-line front end. Everything goes through the public C API in
// divgraph/divgraph.h; the core library is never linked directly.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <divgraph/divgraph.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

int report_error(dg_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", dg_last_error(), dg_status_name(status));
  return kExitInputError;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream stream(path);
  if (!stream) {
    std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
    return false;
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  *out = buffer.str();
  return true;
}

// Inline tokens, or "@file" to load the list from a file.
bool gather_set_text(const std::vector<std::string>& tokens, std::string* out) {
  if (tokens.size() == 1 && !tokens[0].empty() && tokens[0][0] == '@') {
    return read_file(tokens[0].substr(1), out);
  }
  std::string joined;
  for (const std::string& token : tokens) {
    if (!joined.empty()) {
      joined.push_back(' ');
    }
    joined += token;
  }
  *out = joined;
  return true;
}

bool parse_ells(const std::string& text, std::vector<uint32_t>* out) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') {
      c = ' ';
    }
  }
  std::istringstream stream(normalized);
  std::string token;
  while (stream >> token) {
    try {
      int value = std::stoi(token);
      if (value < 2) {
        std::fprintf(stderr, "error: --ell values must be at least 2, got '%s'\n",
                     token.c_str());
        return false;
      }
      out->push_back(static_cast<uint32_t>(value));
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: '%s' is not a valid --ell value\n", token.c_str());
      return false;
    }
  }
  if (out->empty()) {
    std::fprintf(stderr, "error: --ell list is empty\n");
    return false;
  }
  return true;
}

struct OwnedSet {
  dg_integer_set* handle = nullptr;
  ~OwnedSet() { dg_integer_set_free(handle); }
};

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { dg_string_free(text); }
};

int parse_set(const std::vector<std::string>& tokens, OwnedSet* set) {
  std::string text;
  if (!gather_set_text(tokens, &text)) {
    return kExitInputError;
  }
  dg_status status = dg_integer_set_parse(text.c_str(), &set->handle);
  if (status != DG_OK) {
    return report_error(status);
  }
  return kExitOk;
}

int run_build(const std::vector<std::string>& tokens, const std::string& dot_which,
              const std::string& dot_out) {
  OwnedSet set;
  if (int code = parse_set(tokens, &set)) {
    return code;
  }
  OwnedString json;
  if (dg_status status = dg_build_json(set.handle, &json.text); status != DG_OK) {
    return report_error(status);
  }
  std::fputs(json.text, stdout);
  std::fputc('\n', stdout);
  if (!dot_which.empty()) {
    OwnedString dot;
    if (dg_status status = dg_graph_dot(set.handle, dot_which.c_str(), &dot.text);
        status != DG_OK) {
      return report_error(status);
    }
    std::string path = dot_out.empty() ? dot_which + ".dot" : dot_out;
    std::ofstream out(path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
      return kExitInputError;
    }
    out << dot.text;
  }
  return kExitOk;
}

int run_set_to_json(const std::vector<std::string>& tokens,
                    dg_status (*api)(const dg_integer_set*, char**)) {
  OwnedSet set;
  if (int code = parse_set(tokens, &set)) {
    return code;
  }
  OwnedString json;
  if (dg_status status = api(set.handle, &json.text); status != DG_OK) {
    return report_error(status);
  }
  std::fputs(json.text, stdout);
  std::fputc('\n', stdout);
  return kExitOk;
}

int run_realize(const std::string& graph_path) {
  std::string text;
  if (!read_file(graph_path, &text)) {
    return kExitInputError;
  }
  dg_bigraph* graph = nullptr;
  if (dg_status status = dg_bigraph_parse(text.c_str(), &graph); status != DG_OK) {
    return report_error(status);
  }
  OwnedString json;
  dg_status status = dg_realize_json(graph, &json.text);
  dg_bigraph_free(graph);
  if (status != DG_OK) {
    return report_error(status);
  }
  std::fputs(json.text, stdout);
  std::fputc('\n', stdout);
  return kExitOk;
}

int run_verify(const std::vector<std::string>& tokens, const std::vector<uint32_t>& ells) {
  OwnedSet set;
  if (int code = parse_set(tokens, &set)) {
    return code;
  }
  OwnedString jsonl;
  int all_passed = 0;
  dg_status status = dg_verify_json(set.handle, ells.empty() ? nullptr : ells.data(),
                                    ells.size(), &all_passed, &jsonl.text);
  if (status != DG_OK) {
    return report_error(status);
  }
  std::fputs(jsonl.text, stdout);
  return all_passed ? kExitOk : kExitCheckFailed;
}

int run_fuzz(uint64_t trials, uint64_t seed, uint32_t max_set_size, uint64_t max_element,
             const std::vector<uint32_t>& ells, bool all_reports) {
  OwnedString jsonl;
  int all_passed = 0;
  dg_status status =
      dg_fuzz_json(trials, seed, max_set_size, max_element, ells.empty() ? nullptr : ells.data(),
                   ells.size(), all_reports ? 1 : 0, &all_passed, &jsonl.text);
  if (status != DG_OK) {
    return report_error(status);
  }
  std::fputs(jsonl.text, stdout);
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite divisor graph toolkit: B(X), Delta(X), Gamma(X)"};
  app.require_subcommand(1);

  const char* set_help = "positive integers, comma/space separated, or @file";

  auto* build = app.add_subcommand("build", "print rho(X), X* and B/Delta/Gamma as JSON");
  std::vector<std::string> build_tokens;
  std::string dot_which;
  std::string dot_out;
  build->add_option("X", build_tokens, set_help)->required()->expected(-1);
  build->add_option("--dot", dot_which, "also write DOT for one of: B, delta, gamma");
  build->add_option("--dot-out", dot_out, "DOT output path (default: <which>.dot)");

  auto* realize = app.add_subcommand("realize", "construct X with B(X) isomorphic to a graph");
  std::string graph_path;
  realize->add_option("--graph", graph_path, "bipartitioned graph file")->required();

  auto* dualize = app.add_subcommand("dualize", "swap the roles of Delta and Gamma");
  std::vector<std::string> dualize_tokens;
  dualize->add_option("X", dualize_tokens, set_help)->required()->expected(-1);

  auto* analyze = app.add_subcommand("analyze", "components, diameters and girths");
  std::vector<std::string> analyze_tokens;
  analyze->add_option("X", analyze_tokens, set_help)->required()->expected(-1);

  auto* patterns = app.add_subcommand("patterns", "triangle and K4 diagnoses");
  std::vector<std::string> patterns_tokens;
  patterns->add_option("X", patterns_tokens, set_help)->required()->expected(-1);

  auto* verify = app.add_subcommand("verify", "run all theorem checks on X");
  std::vector<std::string> verify_tokens;
  std::string verify_ells = "3,4";
  verify->add_option("X", verify_tokens, set_help)->required()->expected(-1);
  verify->add_option("--ell", verify_ells, "Inc(K_ell) sizes, e.g. 3,4");

  auto* fuzz = app.add_subcommand("fuzz", "seeded random theorem suite");
  uint64_t trials = 1000;
  uint64_t seed = 0;
  uint32_t max_set_size = 7;
  uint64_t max_element = 10000;
  std::string fuzz_ells = "3,4";
  bool all_reports = false;
  fuzz->add_option("--trials", trials, "number of trials");
  fuzz->add_option("--seed", seed, "deterministic replay token");
  fuzz->add_option("--max-set-size", max_set_size, "largest |X| drawn");
  fuzz->add_option("--max-element", max_element, "largest element drawn")
      ->check(CLI::Range(static_cast<uint64_t>(2), static_cast<uint64_t>(1000000000000)));
  fuzz->add_option("--ell", fuzz_ells, "Inc(K_ell) sizes, e.g. 3,4");
  fuzz->add_flag("--all", all_reports, "emit passing reports too, not only failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (build->parsed()) {
    return run_build(build_tokens, dot_which, dot_out);
  }
  if (realize->parsed()) {
    return run_realize(graph_path);
  }
  if (dualize->parsed()) {
    return run_set_to_json(dualize_tokens, dg_dualize_json);
  }
  if (analyze->parsed()) {
    return run_set_to_json(analyze_tokens, dg_analyze_json);
  }
  if (patterns->parsed()) {
    return run_set_to_json(patterns_tokens, dg_patterns_json);
  }
  if (verify->parsed()) {
    std::vector<uint32_t> ells;
    if (!parse_ells(verify_ells, &ells)) {
      return kExitInputError;
    }
    return run_verify(verify_tokens, ells);
  }
  if (fuzz->parsed()) {
    std::vector<uint32_t> ells;
    if (!parse_ells(fuzz_ells, &ells)) {
      return kExitInputError;
    }
    return run_fuzz(trials, seed, max_set_size, max_element, ells, all_reports);
  }
  return kExitInputError;
}
