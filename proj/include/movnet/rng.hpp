#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace movnet {

// SplitMix64 finalizer; used to spread seeds for derived streams.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seed for sub-stream (stream, index) of a master seed. Distinct (stream, index)
// pairs give statistically independent streams; the mapping is fixed so the same
// master seed always reproduces the same draws regardless of evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ mix64(stream + 0xD1B54A32D192ED03ull));
  h = mix64(h ^ mix64(index + 0x8CB92BA72F3D8DD7ull));
  return h;
}

// mt19937_64 with hand-rolled draws. The engine's output sequence is pinned by
// the standard; std::uniform_*_distribution is not, so the draws here avoid it
// to keep runs byte-reproducible across standard libraries.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [0, bound) by rejection; bound must be positive.
  std::size_t uniform_index(std::size_t bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = b * (UINT64_MAX / b);
    for (;;) {
      const std::uint64_t u = engine_();
      if (u < limit) return static_cast<std::size_t>(u % b);
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

// One independent stream per agent, derived from the master seed by agent
// index. Agent trajectories therefore do not depend on iteration order.
class AgentRngPool {
 public:
  AgentRngPool(std::uint64_t master, std::uint64_t stream, std::size_t n) {
    streams_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      streams_.emplace_back(derive_seed(master, stream, i));
    }
  }

  // Explicit per-agent seeds, e.g. for relabeling experiments.
  explicit AgentRngPool(const std::vector<std::uint64_t>& seeds) {
    streams_.reserve(seeds.size());
    for (std::uint64_t s : seeds) streams_.emplace_back(s);
  }

  SplitRng& stream(std::size_t i) { return streams_[i]; }
  std::size_t size() const { return streams_.size(); }

 private:
  std::vector<SplitRng> streams_;
};

}  // namespace movnet
