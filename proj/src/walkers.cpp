#include "movnet/walkers.hpp"

#include <algorithm>

namespace movnet {

double MeetingSnapshot::max_row_sum() const {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += a_at(i, j);
    best = std::max(best, row);
  }
  return best;
}

Positions step_walk(const Graph& g, const Positions& p, AgentRngPool& rng) {
  if (p.size() != rng.size()) {
    throw ConfigInvalidError("one rng stream per agent");
  }
  Positions next(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& nbr = g.neighbors(p[i]);
    if (nbr.empty()) throw IsolatedVertexError(p[i]);
    next[i] = nbr[rng.stream(i).uniform_index(nbr.size())];
  }
  return next;
}

MeetingSnapshot snapshot(const Positions& p, const CouplingSchedule& s, long t) {
  const int n = static_cast<int>(p.size());
  if (n != s.agent_count()) {
    throw ConfigInvalidError("positions and schedule agree on agent count");
  }
  MeetingSnapshot snap;
  snap.t = t;
  snap.positions = p;
  snap.n = n;
  snap.neighbor_sets.resize(p.size());
  snap.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p[i] != p[j]) continue;
      const double b = s.value(i, j, static_cast<double>(t));
      snap.a[static_cast<std::size_t>(i) * n + j] = b;
      snap.a[static_cast<std::size_t>(j) * n + i] = b;
      snap.neighbor_sets[i].push_back(j);
      snap.neighbor_sets[j].push_back(i);
    }
  }
  // neighbor_sets must stay sorted ascending.
  for (auto& set : snap.neighbor_sets) std::sort(set.begin(), set.end());
  return snap;
}

}  // namespace movnet
