#ifndef DIVGRAPH_ERRORS_HPP
#define DIVGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divgraph {

// Base of every recoverable library error. Contract violations (negative
// counts, indices out of range) use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Trial division could not finish within the configured bound.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Input set was empty or deduplicated to {1}.
class EmptyOrTrivialError : public Error {
 public:
  using Error::Error;
};

// A bipartitioned graph handed to realize() has a vertex on no edge.
class IsolatedVertexError : public Error {
 public:
  IsolatedVertexError(const std::string& vertex, const std::string& message)
      : Error(message), vertex_(vertex) {}
  const std::string& vertex() const { return vertex_; }

 private:
  std::string vertex_;
};

// Graph query named a vertex that is not present.
class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (integer lists, graph files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace divgraph

#endif  // DIVGRAPH_ERRORS_HPP
