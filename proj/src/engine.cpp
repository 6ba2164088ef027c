#include "movnet/engine.hpp"

#include <algorithm>
#include <cmath>

namespace movnet {

double spread(const StateVector& x) {
  if (x.empty()) throw ConfigInvalidError("n >= 1");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

double disagreement(const StateVector& x) {
  if (x.empty()) throw ConfigInvalidError("n >= 1");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double sq = 0.0;
  for (double v : x) sq += (v - mean) * (v - mean);
  return std::sqrt(sq);
}

StateVector consensus_step(const StateVector& x, const MeetingSnapshot& snap, double epsilon) {
  const int n = static_cast<int>(x.size());
  if (n != snap.n) throw ConfigInvalidError("state vector and snapshot agree on agent count");
  StateVector next(x.size());
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    double pull = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = snap.a_at(i, j);
      row_sum += a;
      pull += a * (x[j] - x[i]);
    }
    if (epsilon * row_sum > 1.0) throw ConvexityViolatedError(i, epsilon * row_sum);
    next[i] = x[i] + epsilon * pull;
  }
  return next;
}

namespace {

void validate(const SimConfig& cfg) {
  if (cfg.agents < 2) throw ConfigInvalidError("n >= 2");
  if (cfg.horizon < 1) throw ConfigInvalidError("horizon >= 1");
  if (cfg.graph.vertex_count() < 1) throw ConfigInvalidError("graph has at least one vertex");
  if (!(cfg.consensus_tol > 0.0)) throw ConfigInvalidError("consensus_tol > 0");
  if (const auto* fixed = std::get_if<FixedEpsilon>(&cfg.epsilon_policy)) {
    if (!(fixed->epsilon > 0.0)) throw ConfigInvalidError("epsilon > 0");
  } else {
    const double alpha = std::get<AutoEpsilon>(cfg.epsilon_policy).alpha;
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigInvalidError("alpha in (0, 1)");
  }
  if (const auto* uniform = std::get_if<UniformInit>(&cfg.init)) {
    if (!(uniform->lo <= uniform->hi) || !std::isfinite(uniform->lo) ||
        !std::isfinite(uniform->hi)) {
      throw ConfigInvalidError("init lo <= hi and finite");
    }
  } else {
    const auto& values = std::get<ExplicitInit>(cfg.init).values;
    if (static_cast<int>(values.size()) != cfg.agents) {
      throw ConfigInvalidError("explicit init has one value per agent");
    }
    for (double v : values) {
      if (!std::isfinite(v)) throw ConfigInvalidError("init values finite");
    }
  }
  require_no_isolated_vertex(cfg.graph);
}

}  // namespace

Trajectory run(const SimConfig& cfg) {
  validate(cfg);

  Trajectory out;
  out.config = cfg;
  if (is_bipartite(cfg.graph)) {
    out.warnings.push_back(
        "graph is bipartite: walkers that start in different parts can never meet");
  }

  SplitRng schedule_rng(derive_seed(cfg.seed, stream::kSchedule, 0));
  out.schedule = make_schedule(cfg.agents, cfg.schedule_family, schedule_rng);
  out.delta_sup = delta_sup(out.schedule, cfg.horizon).delta_sup;

  if (const auto* fixed = std::get_if<FixedEpsilon>(&cfg.epsilon_policy)) {
    out.epsilon = fixed->epsilon;
  } else {
    out.epsilon = std::get<AutoEpsilon>(cfg.epsilon_policy).alpha / out.delta_sup;
  }
  if (!(out.epsilon > 0.0 && out.epsilon * out.delta_sup < 1.0)) {
    throw ConfigInvalidError("epsilon < 1/delta_sup");
  }

  Positions positions(cfg.agents);
  StateVector states(cfg.agents);
  for (int i = 0; i < cfg.agents; ++i) {
    SplitRng pos_rng(derive_seed(cfg.seed, stream::kInitPositions, static_cast<std::uint64_t>(i)));
    positions[i] = static_cast<int>(pos_rng.uniform_index(cfg.graph.vertex_count()));
  }
  if (const auto* uniform = std::get_if<UniformInit>(&cfg.init)) {
    for (int i = 0; i < cfg.agents; ++i) {
      SplitRng state_rng(derive_seed(cfg.seed, stream::kInitStates, static_cast<std::uint64_t>(i)));
      states[i] = state_rng.uniform_real(uniform->lo, uniform->hi);
    }
  } else {
    states = std::get<ExplicitInit>(cfg.init).values;
  }

  AgentRngPool walk_rng(cfg.seed, stream::kWalk, static_cast<std::size_t>(cfg.agents));

  for (long t = 0;; ++t) {
    out.records.push_back({t, positions, states});
    if (spread(states) < cfg.consensus_tol) {
      out.consensus_tick = t;
      break;
    }
    if (t == cfg.horizon) break;
    const MeetingSnapshot snap = snapshot(positions, out.schedule, t);
    states = consensus_step(states, snap, out.epsilon);
    positions = step_walk(cfg.graph, positions, walk_rng);
  }

  const StateVector& final_states = out.records.back().states;
  out.final_spread = spread(final_states);
  if (out.consensus_tick) {
    double mean = 0.0;
    for (double v : final_states) mean += v;
    out.consensus_value = mean / static_cast<double>(final_states.size());
  }
  return out;
}

}  // namespace movnet
