#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "movnet/graph.hpp"

namespace movnet {

struct MeetingTimeReport {
  std::pair<int, int> start;
  // Expected first-coincidence steps; +infinity when the diagonal of the
  // product chain is not reached almost surely (parity trap).
  double expected_steps = 0.0;
  std::string method;  // "exact" | "monte_carlo"
  std::optional<long> trials;
  std::optional<double> std_error;
  std::optional<long> censored;  // Monte Carlo runs that hit the cap

  bool infinite() const;
};

// Expected meeting time of two independent uniform walkers started at (u, v),
// solved exactly on the product chain (absorbing diagonal) by dense Gaussian
// elimination with partial pivoting. Detects non-absorbing classes and reports
// infinity. Throws GraphTooLargeError, DisconnectedError.
MeetingTimeReport exact_meeting_time(const Graph& g, int u, int v, int max_vertices = 40);

// Monte Carlo estimate using the walkers module's step dynamics; trials that
// hit `cap` are counted as censored and excluded from the mean.
MeetingTimeReport empirical_meeting_time(const Graph& g, int u, int v, long trials, long cap,
                                         std::uint64_t seed);

}  // namespace movnet
