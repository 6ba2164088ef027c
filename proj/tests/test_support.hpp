#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "movnet/engine.hpp"
#include "movnet/graph.hpp"
#include "movnet/rng.hpp"

namespace test_support {

// Independent dense matrix-form oracle for the consensus update:
// x' = (I - eps L) x with L = diag(row sums of A) - A.
inline movnet::StateVector laplacian_oracle(const movnet::StateVector& x,
                                            const movnet::MeetingSnapshot& snap, double eps) {
  const int n = snap.n;
  std::vector<double> lap(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += snap.a_at(i, j);
      lap[static_cast<std::size_t>(i) * n + j] = -snap.a_at(i, j);
    }
    lap[static_cast<std::size_t>(i) * n + i] += row;
  }
  movnet::StateVector out(x.size());
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += lap[static_cast<std::size_t>(i) * n + j] * x[j];
    out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - eps * acc;
  }
  return out;
}

inline movnet::Graph cycle_graph(int n) {
  std::vector<movnet::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return movnet::Graph::from_edges(edges, n);
}

inline movnet::Graph path_graph(int n) {
  std::vector<movnet::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return movnet::Graph::from_edges(edges, n);
}

inline movnet::Graph complete_graph(int n) {
  std::vector<movnet::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return movnet::Graph::from_edges(edges, n);
}

inline movnet::Graph star_graph(int leaves) {
  std::vector<movnet::Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return movnet::Graph::from_edges(edges, leaves + 1);
}

inline movnet::Graph triangle() { return cycle_graph(3); }

inline movnet::Graph k2() { return movnet::Graph::from_edges({{0, 1, 1.0}}, 2); }

inline movnet::Graph random_graph(int n, double edge_prob, movnet::SplitRng& rng) {
  std::vector<movnet::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() < edge_prob) edges.push_back({i, j, 1.0});
    }
  }
  return movnet::Graph::from_edges(edges, n);
}

// Naive full-permutation Hamiltonicity oracles, usable up to ~8 vertices.
inline bool perm_hamiltonian_path(const movnet::Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool perm_hamiltonian_cycle(const movnet::Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok && g.has_edge(perm[n - 1], perm[0])) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace test_support
