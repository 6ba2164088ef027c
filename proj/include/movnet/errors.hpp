#pragma once

#include <stdexcept>
#include <string>

namespace movnet {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(int v)
      : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  int vertex;
};

class NonPositiveWeightError : public Error {
 public:
  NonPositiveWeightError(int i, int j, double w)
      : Error("edge (" + std::to_string(i) + "," + std::to_string(j) +
              ") has non-positive weight " + std::to_string(w)),
        u(i),
        v(j),
        weight(w) {}
  int u;
  int v;
  double weight;
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(int i, int j)
      : Error("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")"),
        u(i),
        v(j) {}
  int u;
  int v;
};

class MalformedLineError : public Error {
 public:
  MalformedLineError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_no(line) {}
  int line_no;
};

class EmptyEdgeListError : public Error {
 public:
  EmptyEdgeListError() : Error("edge list contains no edges") {}
};

class VertexOutOfRangeError : public Error {
 public:
  VertexOutOfRangeError(int v, int vertex_count)
      : Error("vertex " + std::to_string(v) + " out of range [0, " +
              std::to_string(vertex_count) + ")"),
        vertex(v) {}
  int vertex;
};

class TooLargeForExactSearchError : public Error {
 public:
  TooLargeForExactSearchError(int vertex_count, int cap)
      : Error("graph with " + std::to_string(vertex_count) +
              " vertices exceeds exact-search cap " + std::to_string(cap)),
        vertex_count(vertex_count),
        cap(cap) {}
  int vertex_count;
  int cap;
};

class EmptyFamilyError : public Error {
 public:
  EmptyFamilyError() : Error("coupling family is empty") {}
};

class NonPositiveFunctionError : public Error {
 public:
  explicit NonPositiveFunctionError(const std::string& kind, const std::string& why)
      : Error("coupling function '" + kind + "' rejected: " + why), kind(kind) {}
  std::string kind;
};

class AgentOutOfRangeError : public Error {
 public:
  AgentOutOfRangeError(int agent, int n)
      : Error("agent " + std::to_string(agent) + " out of range [0, " +
              std::to_string(n) + ")"),
        agent(agent) {}
  int agent;
};

class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(int v)
      : Error("vertex " + std::to_string(v) + " is isolated; walkers have nowhere to move"),
        vertex(v) {}
  int vertex;
};

class ConvexityViolatedError : public Error {
 public:
  ConvexityViolatedError(int agent, double epsilon_row_sum)
      : Error("convexity violated at agent " + std::to_string(agent) +
              ": epsilon * row sum = " + std::to_string(epsilon_row_sum) + " > 1"),
        agent(agent),
        epsilon_row_sum(epsilon_row_sum) {}
  int agent;
  double epsilon_row_sum;
};

// Carries the violated constraint verbatim so callers can name it.
class ConfigInvalidError : public Error {
 public:
  explicit ConfigInvalidError(const std::string& constraint)
      : Error("invalid config: constraint \"" + constraint + "\" violated"),
        constraint(constraint) {}
  std::string constraint;
};

class GraphTooLargeError : public Error {
 public:
  GraphTooLargeError(int vertex_count, int cap)
      : Error("graph with " + std::to_string(vertex_count) +
              " vertices exceeds product-chain cap " + std::to_string(cap)),
        vertex_count(vertex_count),
        cap(cap) {}
  int vertex_count;
  int cap;
};

class DisconnectedError : public Error {
 public:
  DisconnectedError() : Error("graph is disconnected") {}
};

}  // namespace movnet
