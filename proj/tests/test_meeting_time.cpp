#include <doctest.h>

#include <cmath>

#include "movnet/meeting_time.hpp"
#include "test_support.hpp"

using movnet::Graph;
using movnet::MeetingTimeReport;
using namespace test_support;

TEST_CASE("meeting time is zero when the walkers start together") {
  const MeetingTimeReport exact = movnet::exact_meeting_time(triangle(), 1, 1);
  CHECK(exact.expected_steps == 0.0);
  CHECK(exact.method == "exact");
  CHECK_FALSE(exact.std_error.has_value());

  const MeetingTimeReport mc = movnet::empirical_meeting_time(triangle(), 1, 1, 1000, 100, 9);
  CHECK(mc.expected_steps == 0.0);
  CHECK(mc.censored == 0);
  CHECK(mc.trials == 1000);
}

TEST_CASE("triangle meeting time is exactly 4") {
  // Two-state chain solved by hand: from any distinct pair the walkers meet
  // with probability 1/4 per step, so E = 4.
  const MeetingTimeReport report = movnet::exact_meeting_time(triangle(), 0, 1);
  CHECK(report.expected_steps == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("K2 walkers that start apart are parity-trapped") {
  const MeetingTimeReport report = movnet::exact_meeting_time(k2(), 0, 1);
  CHECK(report.infinite());
}

TEST_CASE("exact meeting time is symmetric in the start pair") {
  const Graph g = movnet::petersen();
  for (const auto [u, v] : {std::pair{0, 1}, std::pair{0, 7}, std::pair{2, 9}, std::pair{3, 6}}) {
    const double forward = movnet::exact_meeting_time(g, u, v).expected_steps;
    const double backward = movnet::exact_meeting_time(g, v, u).expected_steps;
    CHECK(std::fabs(forward - backward) < 1e-9);
  }
}

TEST_CASE("monte carlo agrees with the exact triangle value") {
  const MeetingTimeReport mc = movnet::empirical_meeting_time(triangle(), 0, 1, 100000, 10000, 42);
  REQUIRE(mc.std_error.has_value());
  CHECK(mc.censored == 0);
  CHECK(std::fabs(mc.expected_steps - 4.0) < 3.0 * *mc.std_error);
}

TEST_CASE("monte carlo agrees with the exact petersen adjacent-start value") {
  const Graph g = movnet::petersen();
  const double exact = movnet::exact_meeting_time(g, 0, 1).expected_steps;
  const MeetingTimeReport mc = movnet::empirical_meeting_time(g, 0, 1, 100000, 100000, 7);
  REQUIRE(mc.std_error.has_value());
  CHECK(mc.censored == 0);
  CHECK(std::fabs(mc.expected_steps - exact) < 3.0 * *mc.std_error);
}

TEST_CASE("empirical matches exact across a small non-bipartite corpus") {
  const Graph corpus[] = {triangle(),        cycle_graph(5),     cycle_graph(7),
                          complete_graph(4), complete_graph(5),  movnet::petersen(),
                          cycle_graph(9),    complete_graph(12)};
  std::uint64_t seed = 1000;
  for (const Graph& g : corpus) {
    const int u = 0;
    const int v = g.vertex_count() - 1;
    const double exact = movnet::exact_meeting_time(g, u, v).expected_steps;
    const MeetingTimeReport mc = movnet::empirical_meeting_time(g, u, v, 20000, 100000, seed++);
    REQUIRE(mc.std_error.has_value());
    CAPTURE(g.vertex_count());
    CHECK(std::fabs(mc.expected_steps - exact) < 3.0 * *mc.std_error);
  }
}

TEST_CASE("censored trials are reported, not folded into the mean") {
  // K2 apart: the two walkers swap forever, so every trial hits the cap.
  const MeetingTimeReport mc = movnet::empirical_meeting_time(k2(), 0, 1, 50, 100, 3);
  CHECK(mc.censored == 50);
  CHECK(mc.infinite());
}

TEST_CASE("exact solver validates its inputs") {
  CHECK_THROWS_AS((void)movnet::exact_meeting_time(path_graph(41), 0, 1),
                  movnet::GraphTooLargeError);
  const Graph disjoint = Graph::from_edges({{0, 1, 1.0}, {2, 3, 1.0}}, 4);
  CHECK_THROWS_AS((void)movnet::exact_meeting_time(disjoint, 0, 2), movnet::DisconnectedError);
  CHECK_THROWS_AS((void)movnet::exact_meeting_time(triangle(), 0, 5),
                  movnet::VertexOutOfRangeError);
}

TEST_CASE("same-parity walkers on an even cycle still meet") {
  // C4 is bipartite, but a same-part start pair reaches the diagonal.
  const Graph c4 = cycle_graph(4);
  const MeetingTimeReport same_part = movnet::exact_meeting_time(c4, 0, 2);
  CHECK_FALSE(same_part.infinite());
  const MeetingTimeReport diff_part = movnet::exact_meeting_time(c4, 0, 1);
  CHECK(diff_part.infinite());
}
