#pragma once

#include <vector>

#include "movnet/coupling.hpp"
#include "movnet/graph.hpp"
#include "movnet/rng.hpp"

namespace movnet {

// positions[i] = current node of agent i.
using Positions = std::vector<int>;

// Meeting structure at one tick: who is co-located with whom, and the induced
// coupling matrix a_ij(t) = b_ij(t) when i and j share a node, else 0.
struct MeetingSnapshot {
  long t = 0;
  Positions positions;
  std::vector<std::vector<int>> neighbor_sets;  // sorted agent indices, excludes self
  std::vector<double> a;                        // n*n row-major, symmetric, zero diagonal
  int n = 0;

  double a_at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  // max_i sum_j a_ij; the quantity the convexity guard compares against 1/eps.
  double max_row_sum() const;
};

// Advance every walker one step: each agent independently moves to a uniformly
// chosen neighbor of its current node, drawing from its own stream.
Positions step_walk(const Graph& g, const Positions& p, AgentRngPool& rng);

// Meeting snapshot for positions p at tick t under schedule s.
MeetingSnapshot snapshot(const Positions& p, const CouplingSchedule& s, long t);

}  // namespace movnet
