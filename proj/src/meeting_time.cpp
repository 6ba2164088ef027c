#include "movnet/meeting_time.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <vector>

#include "movnet/engine.hpp"
#include "movnet/rng.hpp"
#include "movnet/walkers.hpp"

namespace movnet {

bool MeetingTimeReport::infinite() const { return std::isinf(expected_steps); }

namespace {

// Solve A x = b in place by Gaussian elimination with partial pivoting.
// A is m x m row-major. Product chains at desk scale stay small enough
// that a dense solve is exact to machine precision and fast.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, std::size_t m) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(a[col * m + col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      const double candidate = std::fabs(a[r * m + col]);
      if (candidate > best) {
        best = candidate;
        pivot = r;
      }
    }
    if (best == 0.0) throw Error("singular product-chain system");
    if (pivot != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[pivot * m + c], a[col * m + c]);
      std::swap(b[pivot], b[col]);
    }
    const double diag = a[col * m + col];
    for (std::size_t r = col + 1; r < m; ++r) {
      const double factor = a[r * m + col] / diag;
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= factor * a[col * m + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(m);
  for (std::size_t r = m; r-- > 0;) {
    double acc = b[r];
    for (std::size_t c = r + 1; c < m; ++c) acc -= a[r * m + c] * x[c];
    x[r] = acc / a[r * m + r];
  }
  return x;
}

}  // namespace

MeetingTimeReport exact_meeting_time(const Graph& g, int u, int v, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) throw GraphTooLargeError(n, max_vertices);
  if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
  if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
  if (!is_connected(g)) throw DisconnectedError();
  require_no_isolated_vertex(g);

  MeetingTimeReport report;
  report.start = {u, v};
  report.method = "exact";
  if (u == v) {
    report.expected_steps = 0.0;
    return report;
  }

  // Product chain on vertex pairs; diagonal states absorb.
  const auto id = [n](int a, int b) { return a * n + b; };
  const int states = n * n;
  const auto is_diagonal = [n](int s) { return s / n == s % n; };

  const auto for_each_transition = [&](int s, auto&& fn) {
    const int a = s / n;
    const int b = s % n;
    for (int an : g.neighbors(a)) {
      for (int bn : g.neighbors(b)) fn(id(an, bn));
    }
  };

  // Forward-reachable set from the start (diagonal states have no outgoing).
  std::vector<char> reachable(states, 0);
  {
    std::deque<int> queue{id(u, v)};
    reachable[id(u, v)] = 1;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      if (is_diagonal(s)) continue;
      for_each_transition(s, [&](int next) {
        if (!reachable[next]) {
          reachable[next] = 1;
          queue.push_back(next);
        }
      });
    }
  }

  // States that can reach the diagonal, via reverse BFS from all diagonal states.
  std::vector<char> absorbing_reaches(states, 0);
  {
    std::deque<int> queue;
    for (int a = 0; a < n; ++a) {
      absorbing_reaches[id(a, a)] = 1;
      queue.push_back(id(a, a));
    }
    // Reverse edges: s' <- s whenever s (non-diagonal) steps to s'.
    std::vector<std::vector<int>> reverse(states);
    for (int s = 0; s < states; ++s) {
      if (is_diagonal(s)) continue;
      for_each_transition(s, [&](int next) { reverse[next].push_back(s); });
    }
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      for (int prev : reverse[s]) {
        if (!absorbing_reaches[prev]) {
          absorbing_reaches[prev] = 1;
          queue.push_back(prev);
        }
      }
    }
  }

  // A reachable state that cannot reach the diagonal is hit with positive
  // probability, so absorption is not almost sure and the expectation is
  // infinite. Otherwise absorption is a.s. and the linear system is regular.
  for (int s = 0; s < states; ++s) {
    if (reachable[s] && !is_diagonal(s) && !absorbing_reaches[s]) {
      report.expected_steps = std::numeric_limits<double>::infinity();
      return report;
    }
  }

  std::vector<int> unknown_of_state(states, -1);
  std::vector<int> state_of_unknown;
  for (int s = 0; s < states; ++s) {
    if (reachable[s] && !is_diagonal(s)) {
      unknown_of_state[s] = static_cast<int>(state_of_unknown.size());
      state_of_unknown.push_back(s);
    }
  }
  const std::size_t m = state_of_unknown.size();

  // E[s] = 1 + sum_{s'} P(s, s') E[s'], E = 0 on the diagonal.
  std::vector<double> matrix(m * m, 0.0);
  std::vector<double> rhs(m, 1.0);
  for (std::size_t row = 0; row < m; ++row) {
    const int s = state_of_unknown[row];
    const int a = s / n;
    const int b = s % n;
    const double p = 1.0 / (static_cast<double>(g.degree(a)) * g.degree(b));
    matrix[row * m + row] = 1.0;
    for_each_transition(s, [&](int next) {
      const int col = unknown_of_state[next];
      if (col >= 0) matrix[row * m + static_cast<std::size_t>(col)] -= p;
    });
  }

  const std::vector<double> solution = solve_dense(std::move(matrix), std::move(rhs), m);
  report.expected_steps = solution[static_cast<std::size_t>(unknown_of_state[id(u, v)])];
  return report;
}

MeetingTimeReport empirical_meeting_time(const Graph& g, int u, int v, long trials, long cap,
                                         std::uint64_t seed) {
  if (trials < 1) throw ConfigInvalidError("trials >= 1");
  if (cap < 1) throw ConfigInvalidError("cap >= 1");
  const int n = g.vertex_count();
  if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
  if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
  require_no_isolated_vertex(g);

  MeetingTimeReport report;
  report.start = {u, v};
  report.method = "monte_carlo";
  report.trials = trials;

  long censored = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  long completed = 0;
  for (long trial = 0; trial < trials; ++trial) {
    if (u == v) {
      ++completed;
      continue;  // first coincidence at step 0
    }
    AgentRngPool pool(derive_seed(seed, stream::kMeetingTrial, static_cast<std::uint64_t>(trial)),
                      stream::kWalk, 2);
    Positions pos{u, v};
    long met_at = -1;
    for (long t = 1; t <= cap; ++t) {
      pos = step_walk(g, pos, pool);
      if (pos[0] == pos[1]) {
        met_at = t;
        break;
      }
    }
    if (met_at < 0) {
      ++censored;
    } else {
      ++completed;
      sum += static_cast<double>(met_at);
      sum_sq += static_cast<double>(met_at) * static_cast<double>(met_at);
    }
  }

  report.censored = censored;
  if (completed == 0) {
    report.expected_steps = std::numeric_limits<double>::infinity();
    return report;
  }
  const double mean = sum / static_cast<double>(completed);
  report.expected_steps = mean;
  if (completed > 1) {
    const double variance =
        (sum_sq - static_cast<double>(completed) * mean * mean) / static_cast<double>(completed - 1);
    report.std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(completed));
  } else {
    report.std_error = 0.0;
  }
  return report;
}

}  // namespace movnet
