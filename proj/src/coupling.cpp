#include "movnet/coupling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace movnet {

namespace {

std::string short_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_param(const std::string& kind, const std::string& tok) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ConfigInvalidError("family parameter for '" + kind + "' must be a number");
  }
  return v;
}

}  // namespace

CouplingFunction CouplingFunction::constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw NonPositiveFunctionError("const", "constant must be positive and finite");
  }
  return {CouplingKind::Constant, c, 0.0};
}

CouplingFunction CouplingFunction::sin_offset() { return {CouplingKind::SinOffset, 0.0, 0.0}; }

CouplingFunction CouplingFunction::cos_offset() { return {CouplingKind::CosOffset, 0.0, 0.0}; }

CouplingFunction CouplingFunction::exp_decay(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw NonPositiveFunctionError("expdec", "decay rate must be positive and finite");
  }
  return {CouplingKind::ExpDecay, lambda, 0.0};
}

CouplingFunction CouplingFunction::exp_bounded(double tau, double cap) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw NonPositiveFunctionError("expb", "time constant must be positive and finite");
  }
  if (!(cap > 0.0) || !std::isfinite(cap)) {
    throw NonPositiveFunctionError("expb", "cap must be positive and finite");
  }
  return {CouplingKind::ExpBounded, tau, cap};
}

double CouplingFunction::value(double t) const {
  switch (kind_) {
    case CouplingKind::Constant:
      return p0_;
    case CouplingKind::SinOffset:
      return 1.5 + std::sin(t);
    case CouplingKind::CosOffset:
      return 1.5 + std::cos(t);
    case CouplingKind::ExpDecay:
      return std::exp(-p0_ * t) + 0.1;
    case CouplingKind::ExpBounded:
      return std::min(std::exp(t / p0_), p1_);
  }
  return 0.0;  // unreachable
}

double CouplingFunction::bound() const {
  switch (kind_) {
    case CouplingKind::Constant:
      return p0_;
    case CouplingKind::SinOffset:
    case CouplingKind::CosOffset:
      return 2.5;
    case CouplingKind::ExpDecay:
      return 1.1;
    case CouplingKind::ExpBounded:
      return p1_;
  }
  return 0.0;  // unreachable
}

const std::string& CouplingFunction::kind_name() const {
  static const std::string names[] = {"const", "sin", "cos", "expdec", "expb"};
  return names[static_cast<int>(kind_)];
}

std::vector<double> CouplingFunction::params() const {
  switch (kind_) {
    case CouplingKind::Constant:
    case CouplingKind::ExpDecay:
      return {p0_};
    case CouplingKind::ExpBounded:
      return {p0_, p1_};
    case CouplingKind::SinOffset:
    case CouplingKind::CosOffset:
      return {};
  }
  return {};  // unreachable
}

std::string CouplingFunction::token() const {
  std::string out = kind_name();
  bool first = true;
  for (double p : params()) {
    out += first ? ':' : ',';
    out += short_double(p);
    first = false;
  }
  return out;
}

CouplingFunction CouplingFunction::from_token(const std::string& token) {
  std::string kind = token;
  std::vector<std::string> params;
  if (const auto colon = token.find(':'); colon != std::string::npos) {
    kind = token.substr(0, colon);
    std::string rest = token.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      if (comma == std::string::npos) {
        params.push_back(rest.substr(pos));
        break;
      }
      params.push_back(rest.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }

  const auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ConfigInvalidError("family token '" + kind + "' takes " + std::to_string(count) +
                               " parameter(s)");
    }
  };
  if (kind == "const") {
    expect(1);
    return constant(parse_param(kind, params[0]));
  }
  if (kind == "sin") {
    expect(0);
    return sin_offset();
  }
  if (kind == "cos") {
    expect(0);
    return cos_offset();
  }
  if (kind == "expdec") {
    expect(1);
    return exp_decay(parse_param(kind, params[0]));
  }
  if (kind == "expb") {
    expect(2);
    return exp_bounded(parse_param(kind, params[0]), parse_param(kind, params[1]));
  }
  throw ConfigInvalidError("unknown coupling kind '" + kind + "'");
}

std::vector<CouplingFunction> CouplingFunction::parse_family(const std::string& text) {
  // Commas separate tokens, but expb carries a comma inside its parameters:
  // a chunk that is a bare number extends the previous chunk.
  std::vector<std::string> chunks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string chunk =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    if (chunk.empty()) throw ConfigInvalidError("family list has an empty token");
    double ignored = 0.0;
    auto [ptr, ec] = std::from_chars(chunk.data(), chunk.data() + chunk.size(), ignored);
    const bool bare_number = ec == std::errc{} && ptr == chunk.data() + chunk.size();
    if (bare_number && !chunks.empty()) {
      chunks.back() += "," + chunk;
    } else {
      chunks.push_back(chunk);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (chunks.empty()) throw ConfigInvalidError("family list is empty");
  std::vector<CouplingFunction> family;
  family.reserve(chunks.size());
  for (const std::string& chunk : chunks) family.push_back(from_token(chunk));
  return family;
}

CouplingSchedule::CouplingSchedule(int n, std::vector<CouplingFunction> per_pair)
    : n_(n), functions_(std::move(per_pair)) {
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (n < 2) throw ConfigInvalidError("n >= 2");
  if (functions_.size() != expected) {
    throw ConfigInvalidError("schedule needs n*(n-1)/2 pair functions");
  }
}

std::size_t CouplingSchedule::pair_index(int i, int j) const {
  // i < j; row-major over the strict upper triangle.
  const std::size_t row = static_cast<std::size_t>(i);
  const std::size_t n = static_cast<std::size_t>(n_);
  return row * (2 * n - row - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

double CouplingSchedule::value(int i, int j, double t) const {
  if (i < 0 || i >= n_) throw AgentOutOfRangeError(i, n_);
  if (j < 0 || j >= n_) throw AgentOutOfRangeError(j, n_);
  if (i == j) return 0.0;
  return functions_[pair_index(std::min(i, j), std::max(i, j))].value(t);
}

const CouplingFunction& CouplingSchedule::pair_function(int i, int j) const {
  if (i < 0 || i >= n_) throw AgentOutOfRangeError(i, n_);
  if (j < 0 || j >= n_) throw AgentOutOfRangeError(j, n_);
  if (i == j) throw AgentOutOfRangeError(i, n_);
  return functions_[pair_index(std::min(i, j), std::max(i, j))];
}

CouplingSchedule make_schedule(int n, const std::vector<CouplingFunction>& family,
                               SplitRng& rng) {
  if (n < 2) throw ConfigInvalidError("n >= 2");
  if (family.empty()) throw EmptyFamilyError();
  std::vector<CouplingFunction> per_pair;
  per_pair.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      per_pair.push_back(family[rng.uniform_index(family.size())]);
    }
  }
  return CouplingSchedule(n, std::move(per_pair));
}

StabilityBound delta_sup(const CouplingSchedule& schedule, long horizon) {
  if (horizon < 1) throw ConfigInvalidError("horizon >= 1");
  double max_bound = 0.0;
  const int n = schedule.agent_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      max_bound = std::max(max_bound, schedule.pair_function(i, j).bound());
    }
  }
  return {static_cast<double>(n - 1) * max_bound};
}

}  // namespace movnet
