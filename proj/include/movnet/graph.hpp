#pragma once

#include <optional>
#include <string>
#include <vector>

#include "movnet/errors.hpp"

namespace movnet {

// Unordered edge with positive weight; canonical form has u < v.
struct Edge {
  int u;
  int v;
  double weight = 1.0;
};

// Weighted undirected simple graph. Vertices are 0..vertex_count()-1, weights
// are symmetric and supported exactly on the edge set.
class Graph {
 public:
  Graph() = default;

  // vertex_count = 1 + max vertex id seen in `edges`.
  static Graph from_edges(const std::vector<Edge>& edges);
  // Explicit vertex count; ids must lie in [0, vertex_count). Allows trailing
  // isolated vertices.
  static Graph from_edges(const std::vector<Edge>& edges, int vertex_count);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted ascending; throws VertexOutOfRangeError.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  // w_uv; 0 for absent pairs (including u == v).
  double weight(int u, int v) const;
  bool has_edge(int u, int v) const { return weight(u, v) > 0.0; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<double>> adj_weights_;  // parallel to adj_
};

// Standard Petersen graph: outer 5-cycle 0..4, spokes i <-> i+5, inner
// pentagram on 5..9; all weights 1.
Graph petersen();

// Parses lines of "u v" or "u v w" (default w = 1). Blank lines and lines
// starting with '#' are ignored. Throws MalformedLineError, SelfLoopError,
// NonPositiveWeightError, DuplicateEdgeError, EmptyEdgeListError.
Graph parse_edge_list(const std::string& text);

// Canonical edge-list text (sorted edges, weight column omitted when 1).
std::string to_edge_list(const Graph& g);

struct AnalyzeOptions {
  bool deep = false;            // also run the vertex-deleted Hamiltonicity checks
  int max_exact_vertices = 24;  // cap for the exact Hamiltonian search
};

struct GraphReport {
  bool connected = false;
  std::optional<int> regular_degree;  // present iff all degrees equal
  std::optional<int> girth;           // absent for forests
  std::optional<int> diameter;        // absent when disconnected
  bool has_hamiltonian_path = false;
  bool has_hamiltonian_cycle = false;
  std::optional<bool> hypohamiltonian;  // only computed under deep
};

// Exact structural analysis; exhaustive backtracking for Hamiltonicity with
// degree-based pruning. Throws TooLargeForExactSearchError beyond the cap.
GraphReport analyze(const Graph& g, const AnalyzeOptions& opts = {});

// Exact searches used by analyze(); exposed for oracle-style testing.
bool hamiltonian_path_exists(const Graph& g);
bool hamiltonian_cycle_exists(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Throws IsolatedVertexError for the first isolated vertex, if any.
void require_no_isolated_vertex(const Graph& g);

}  // namespace movnet
