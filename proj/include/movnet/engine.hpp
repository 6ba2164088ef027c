#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "movnet/coupling.hpp"
#include "movnet/graph.hpp"
#include "movnet/walkers.hpp"

namespace movnet {

using StateVector = std::vector<double>;

struct FixedEpsilon {
  double epsilon;
};
// epsilon = alpha / delta_sup with 0 < alpha < 1.
struct AutoEpsilon {
  double alpha;
};
using EpsilonPolicy = std::variant<FixedEpsilon, AutoEpsilon>;

struct UniformInit {
  double lo = 0.0;
  double hi = 1.0;
};
struct ExplicitInit {
  StateVector values;
};
using InitPolicy = std::variant<UniformInit, ExplicitInit>;

struct SimConfig {
  Graph graph;
  std::string graph_source = "inline";  // provenance label: "petersen", a path, ...
  int agents = 0;
  EpsilonPolicy epsilon_policy = AutoEpsilon{0.9};
  long horizon = 0;
  std::uint64_t seed = 0;
  InitPolicy init = UniformInit{};
  std::vector<CouplingFunction> schedule_family;
  double consensus_tol = 1e-6;
};

struct TickRecord {
  long t;
  Positions positions;
  StateVector states;
};

struct Trajectory {
  std::vector<TickRecord> records;  // t = 0..horizon, or stops at consensus_tick
  std::optional<long> consensus_tick;
  double final_spread = 0.0;
  std::optional<double> consensus_value;
  double epsilon = 0.0;    // effective step size
  double delta_sup = 0.0;  // bound the step size was validated against
  SimConfig config;        // full echo for provenance
  CouplingSchedule schedule;
  std::vector<std::string> warnings;
};

// max_i x_i - min_i x_i.
double spread(const StateVector& x);

// Euclidean norm of the deviation-from-average vector.
double disagreement(const StateVector& x);

// One synchronous step of X_i(t+1) = X_i(t) + eps * sum_j a_ij(t) (X_j - X_i).
// Throws ConvexityViolatedError when eps * row sum exceeds 1 for some agent.
StateVector consensus_step(const StateVector& x, const MeetingSnapshot& snap, double epsilon);

// Full simulation: per tick, snapshot -> consensus_step -> step_walk. Initial
// positions are uniform over vertices; per-agent streams derive from the seed.
// Stops early once spread(x) < consensus_tol. Bitwise deterministic given cfg.
Trajectory run(const SimConfig& cfg);

namespace stream {
// Sub-stream tags for derive_seed(master, stream, index).
inline constexpr std::uint64_t kWalk = 1;
inline constexpr std::uint64_t kInitPositions = 2;
inline constexpr std::uint64_t kInitStates = 3;
inline constexpr std::uint64_t kSchedule = 4;
inline constexpr std::uint64_t kMeetingTrial = 5;
}  // namespace stream

}  // namespace movnet
