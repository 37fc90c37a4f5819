#include "divgraph/matching.hpp"

namespace divgraph {

namespace {

bool augment(std::size_t left, const std::vector<std::vector<std::size_t>>& candidates,
             std::vector<std::size_t>& right_match, std::vector<char>& visited) {
  for (std::size_t right : candidates[left]) {
    if (visited[right]) {
      continue;
    }
    visited[right] = 1;
    if (right_match[right] == kUnmatched ||
        augment(right_match[right], candidates, right_match, visited)) {
      right_match[right] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> maximum_bipartite_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& candidates) {
  std::vector<std::size_t> right_match(right_count, kUnmatched);
  for (std::size_t left = 0; left < candidates.size(); ++left) {
    std::vector<char> visited(right_count, 0);
    augment(left, candidates, right_match, visited);
  }
  std::vector<std::size_t> left_match(candidates.size(), kUnmatched);
  for (std::size_t right = 0; right < right_count; ++right) {
    if (right_match[right] != kUnmatched) {
      left_match[right_match[right]] = right;
    }
  }
  return left_match;
}

}  // namespace divgraph
