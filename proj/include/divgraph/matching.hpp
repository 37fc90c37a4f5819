#ifndef DIVGRAPH_MATCHING_HPP
#define DIVGRAPH_MATCHING_HPP

#include <cstddef>
#include <vector>

namespace divgraph {

// Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
// candidates[i] lists the right-side vertices admissible for left vertex i.
// Returns the right-side partner of each left vertex, or npos when
// unmatched. Deterministic: left vertices are processed in order and
// candidates tried in the given order.
std::vector<std::size_t> maximum_bipartite_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& candidates);

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

}  // namespace divgraph

#endif  // DIVGRAPH_MATCHING_HPP
