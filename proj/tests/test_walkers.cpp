#include <doctest.h>

#include <array>
#include <cmath>

#include "movnet/engine.hpp"
#include "movnet/walkers.hpp"
#include "test_support.hpp"

using movnet::AgentRngPool;
using movnet::Graph;
using movnet::Positions;
using namespace test_support;

TEST_CASE("on K2 the only move is the other node") {
  const Graph g = k2();
  AgentRngPool rng(1, movnet::stream::kWalk, 1);
  Positions p{0};
  for (int step = 0; step < 10; ++step) {
    const Positions next = movnet::step_walk(g, p, rng);
    CHECK(next[0] == 1 - p[0]);
    p = next;
  }
}

TEST_CASE("next-node distribution from petersen node 0 is uniform over neighbors") {
  const Graph g = movnet::petersen();
  AgentRngPool rng(123, movnet::stream::kWalk, 1);
  std::array<int, 10> counts{};
  const int samples = 30000;
  for (int s = 0; s < samples; ++s) {
    const Positions next = movnet::step_walk(g, {0}, rng);
    ++counts[static_cast<std::size_t>(next[0])];
  }
  for (int node = 0; node < 10; ++node) {
    const double freq = static_cast<double>(counts[static_cast<std::size_t>(node)]) / samples;
    if (node == 1 || node == 4 || node == 5) {
      CHECK(std::fabs(freq - 1.0 / 3.0) < 0.02);
    } else {
      CHECK(freq == 0.0);
    }
  }
}

TEST_CASE("step_walk is deterministic given the seed") {
  const Graph g = movnet::petersen();
  AgentRngPool rng_a(77, movnet::stream::kWalk, 4);
  AgentRngPool rng_b(77, movnet::stream::kWalk, 4);
  Positions pa{0, 3, 7, 9};
  Positions pb{0, 3, 7, 9};
  for (int step = 0; step < 200; ++step) {
    pa = movnet::step_walk(g, pa, rng_a);
    pb = movnet::step_walk(g, pb, rng_b);
    CHECK(pa == pb);
  }
}

TEST_CASE("isolated vertices are rejected") {
  const Graph lonely = Graph::from_edges({{0, 1, 1.0}}, 3);
  AgentRngPool rng(1, movnet::stream::kWalk, 1);
  CHECK_THROWS_AS((void)movnet::step_walk(lonely, {2}, rng), movnet::IsolatedVertexError);
}

TEST_CASE("long-run occupancy on petersen is uniform") {
  const Graph g = movnet::petersen();
  AgentRngPool rng(2024, movnet::stream::kWalk, 1);
  std::array<long, 10> visits{};
  Positions p{0};
  const long steps = 100000;
  for (long s = 0; s < steps; ++s) {
    p = movnet::step_walk(g, p, rng);
    ++visits[static_cast<std::size_t>(p[0])];
  }
  for (long count : visits) {
    CHECK(std::fabs(static_cast<double>(count) / steps - 0.1) < 0.01);
  }
}

TEST_CASE("two walkers' positions are statistically independent at equilibrium") {
  const Graph g = movnet::petersen();
  AgentRngPool rng(555, movnet::stream::kWalk, 2);
  Positions p{0, 5};
  for (int burn = 0; burn < 100; ++burn) p = movnet::step_walk(g, p, rng);

  const long ticks = 50000;
  // Joint and marginal occupancy counts for indicator pairs.
  std::array<std::array<long, 10>, 2> marginal{};
  std::array<long, 100> joint{};
  for (long t = 0; t < ticks; ++t) {
    p = movnet::step_walk(g, p, rng);
    ++marginal[0][static_cast<std::size_t>(p[0])];
    ++marginal[1][static_cast<std::size_t>(p[1])];
    ++joint[static_cast<std::size_t>(p[0] * 10 + p[1])];
  }
  for (const auto [u, v] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{3, 7}, std::pair{9, 2}}) {
    const double pu = static_cast<double>(marginal[0][u]) / ticks;
    const double pv = static_cast<double>(marginal[1][v]) / ticks;
    const double pj = static_cast<double>(joint[static_cast<std::size_t>(u * 10 + v)]) / ticks;
    const double sigma = std::sqrt(pu * (1 - pu) * pv * (1 - pv) / ticks);
    CHECK(std::fabs(pj - pu * pv) < 3.0 * sigma);
  }
}

TEST_CASE("snapshot with all-distinct positions is empty") {
  movnet::SplitRng rng(1);
  const auto schedule = movnet::make_schedule(3, {movnet::CouplingFunction::constant(1.0)}, rng);
  const movnet::MeetingSnapshot snap = movnet::snapshot({0, 1, 2}, schedule, 5);
  CHECK(snap.t == 5);
  for (int i = 0; i < 3; ++i) {
    CHECK(snap.neighbor_sets[static_cast<std::size_t>(i)].empty());
    for (int j = 0; j < 3; ++j) CHECK(snap.a_at(i, j) == 0.0);
  }
}

TEST_CASE("snapshot of three co-located agents couples all pairs") {
  movnet::SplitRng rng(1);
  const auto schedule = movnet::make_schedule(4, {movnet::CouplingFunction::constant(1.0)}, rng);
  const movnet::MeetingSnapshot snap = movnet::snapshot({6, 6, 6, 2}, schedule, 0);
  CHECK(snap.neighbor_sets[0] == std::vector<int>{1, 2});
  CHECK(snap.neighbor_sets[1] == std::vector<int>{0, 2});
  CHECK(snap.neighbor_sets[2] == std::vector<int>{0, 1});
  CHECK(snap.neighbor_sets[3].empty());
  for (const auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    CHECK(snap.a_at(i, j) == 1.0);
    CHECK(snap.a_at(j, i) == 1.0);
  }
  for (int i = 0; i < 4; ++i) {
    CHECK(snap.a_at(i, i) == 0.0);
    CHECK(snap.a_at(i, 3) == 0.0);
  }
}

TEST_CASE("snapshot matrices are symmetric with zero diagonal") {
  const Graph g = movnet::petersen();
  movnet::SplitRng schedule_rng(10);
  const auto schedule = movnet::make_schedule(
      8,
      {movnet::CouplingFunction::sin_offset(), movnet::CouplingFunction::cos_offset(),
       movnet::CouplingFunction::exp_decay(0.1)},
      schedule_rng);
  AgentRngPool rng(31, movnet::stream::kWalk, 8);
  Positions p(8, 0);
  for (long t = 0; t < 300; ++t) {
    p = movnet::step_walk(g, p, rng);
    const movnet::MeetingSnapshot snap = movnet::snapshot(p, schedule, t);
    for (int i = 0; i < 8; ++i) {
      CHECK(snap.a_at(i, i) == 0.0);
      for (int j = 0; j < 8; ++j) {
        CHECK(snap.a_at(i, j) == snap.a_at(j, i));
        CHECK((snap.a_at(i, j) > 0.0) == (i != j && p[i] == p[j]));
      }
    }
  }
}
