#pragma once

#include <string>
#include <vector>

#include "movnet/errors.hpp"
#include "movnet/rng.hpp"

namespace movnet {

enum class CouplingKind { Constant, SinOffset, CosOffset, ExpDecay, ExpBounded };

// A positive, bounded time function b(t). The raw family {e^t, sin t, cos t}
// violates both b > 0 and finite sup, so the kinds here are positive bounded
// stand-ins: sin/cos offset by 1.5, decaying and clamped exponentials.
class CouplingFunction {
 public:
  static CouplingFunction constant(double c);                 // b(t) = c
  static CouplingFunction sin_offset();                       // b(t) = 1.5 + sin t
  static CouplingFunction cos_offset();                       // b(t) = 1.5 + cos t
  static CouplingFunction exp_decay(double lambda);           // b(t) = e^{-lambda t} + 0.1
  static CouplingFunction exp_bounded(double tau, double cap);  // b(t) = min(e^{t/tau}, cap)

  CouplingKind kind() const { return kind_; }
  const std::string& kind_name() const;  // "const", "sin", "cos", "expdec", "expb"
  std::vector<double> params() const;
  double value(double t) const;
  // Finite supremum of value(t) over t >= 0.
  double bound() const;

  // Token form, also the CLI grammar: const:1, sin, cos, expdec:0.1, expb:2,100
  std::string token() const;
  static CouplingFunction from_token(const std::string& token);
  // Comma-separated token list; a bare-number chunk continues the previous
  // token's parameter list (expb takes two parameters).
  static std::vector<CouplingFunction> parse_family(const std::string& text);

  friend bool operator==(const CouplingFunction& a, const CouplingFunction& b) {
    return a.kind_ == b.kind_ && a.p0_ == b.p0_ && a.p1_ == b.p1_;
  }

 private:
  CouplingFunction(CouplingKind kind, double p0, double p1) : kind_(kind), p0_(p0), p1_(p1) {}

  CouplingKind kind_;
  double p0_;
  double p1_;
};

// Symmetric assignment of one coupling function per unordered agent pair,
// fixed for a whole run; b_ii(t) = 0.
class CouplingSchedule {
 public:
  CouplingSchedule() = default;
  // per_pair holds n(n-1)/2 functions in (0,1), (0,2), ..., (n-2,n-1) order.
  CouplingSchedule(int n, std::vector<CouplingFunction> per_pair);

  int agent_count() const { return n_; }

  // b_ij(t): 0 when i == j, symmetric in (i, j); throws AgentOutOfRangeError.
  double value(int i, int j, double t) const;
  const CouplingFunction& pair_function(int i, int j) const;

 private:
  std::size_t pair_index(int i, int j) const;

  int n_ = 0;
  std::vector<CouplingFunction> functions_;
};

// Uniformly assigns a family member to each unordered pair; reproducible from
// the rng state, draw order fixed to ascending (i, j).
CouplingSchedule make_schedule(int n, const std::vector<CouplingFunction>& family,
                               SplitRng& rng);

struct StabilityBound {
  double delta_sup;  // upper bound on max_i sum_j b_ij(t) over the horizon
};

// (n-1) * max assigned bound(): sound for every t because at most n-1 agents
// can couple to any one agent. Uniform in t, so valid for any horizon >= 1.
StabilityBound delta_sup(const CouplingSchedule& schedule, long horizon);

}  // namespace movnet
