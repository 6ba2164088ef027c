#include "movnet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace movnet::io {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out = "t,agent,node,state\n";
  for (const TickRecord& rec : trajectory.records) {
    for (std::size_t agent = 0; agent < rec.states.size(); ++agent) {
      out += std::to_string(rec.t);
      out += ',';
      out += std::to_string(agent);
      out += ',';
      out += std::to_string(rec.positions[agent]);
      out += ',';
      out += format_double(rec.states[agent]);
      out += '\n';
    }
  }
  return out;
}

namespace {

Json epsilon_policy_json(const SimConfig& cfg, double effective_epsilon) {
  Json j;
  if (const auto* fixed = std::get_if<FixedEpsilon>(&cfg.epsilon_policy)) {
    j["policy"] = "fixed";
    j["epsilon"] = fixed->epsilon;
  } else {
    j["policy"] = "auto";
    j["alpha"] = std::get<AutoEpsilon>(cfg.epsilon_policy).alpha;
  }
  j["effective_epsilon"] = effective_epsilon;
  return j;
}

Json init_policy_json(const InitPolicy& init) {
  Json j;
  if (const auto* uniform = std::get_if<UniformInit>(&init)) {
    j["policy"] = "uniform";
    j["lo"] = uniform->lo;
    j["hi"] = uniform->hi;
  } else {
    j["policy"] = "explicit";
    j["values"] = std::get<ExplicitInit>(init).values;
  }
  return j;
}

}  // namespace

Json schedule_json(const CouplingSchedule& schedule) {
  Json pairs = Json::array();
  const int n = schedule.agent_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Json entry;
      entry["pair"] = {i, j};
      const CouplingFunction& fn = schedule.pair_function(i, j);
      entry["kind"] = fn.kind_name();
      entry["params"] = fn.params();
      pairs.push_back(std::move(entry));
    }
  }
  return pairs;
}

Json summary_json(const Trajectory& trajectory) {
  const SimConfig& cfg = trajectory.config;
  Json config;
  config["graph"] = cfg.graph_source;
  config["vertices"] = cfg.graph.vertex_count();
  config["edges"] = cfg.graph.edge_count();
  config["agents"] = cfg.agents;
  config["epsilon"] = epsilon_policy_json(cfg, trajectory.epsilon);
  config["delta_sup"] = trajectory.delta_sup;
  config["steps"] = cfg.horizon;
  config["seed"] = cfg.seed;
  Json family = Json::array();
  for (const CouplingFunction& fn : cfg.schedule_family) family.push_back(fn.token());
  config["family"] = std::move(family);
  config["init"] = init_policy_json(cfg.init);
  config["tol"] = cfg.consensus_tol;
  config["schedule"] = schedule_json(trajectory.schedule);
  config["warnings"] = trajectory.warnings;

  Json j;
  if (trajectory.consensus_tick) {
    j["consensus_tick"] = *trajectory.consensus_tick;
  } else {
    j["consensus_tick"] = nullptr;
  }
  j["final_spread"] = trajectory.final_spread;
  if (trajectory.consensus_value) {
    j["consensus_value"] = *trajectory.consensus_value;
  } else {
    j["consensus_value"] = nullptr;
  }
  j["config"] = std::move(config);
  return j;
}

Json report_json(const GraphReport& report) {
  Json j;
  j["connected"] = report.connected;
  if (report.regular_degree) {
    j["regular_degree"] = *report.regular_degree;
  } else {
    j["regular_degree"] = nullptr;
  }
  if (report.girth) {
    j["girth"] = *report.girth;
  } else {
    j["girth"] = nullptr;
  }
  if (report.diameter) {
    j["diameter"] = *report.diameter;
  } else {
    j["diameter"] = nullptr;
  }
  j["has_hamiltonian_path"] = report.has_hamiltonian_path;
  j["has_hamiltonian_cycle"] = report.has_hamiltonian_cycle;
  if (report.hypohamiltonian) j["hypohamiltonian"] = *report.hypohamiltonian;
  return j;
}

Json meeting_report_json(const MeetingTimeReport& report) {
  Json j;
  j["start"] = {report.start.first, report.start.second};
  if (report.infinite()) {
    j["expected_steps"] = nullptr;
    j["reason"] = "parity-trapped";
  } else {
    j["expected_steps"] = report.expected_steps;
  }
  j["method"] = report.method;
  if (report.trials) j["trials"] = *report.trials;
  if (report.std_error) j["std_error"] = *report.std_error;
  if (report.censored) j["censored"] = *report.censored;
  return j;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, double converged_fraction) {
  std::string out = "seed,epsilon,consensus_tick,final_spread,converged\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.seed);
    out += ',';
    out += format_double(row.epsilon);
    out += ',';
    out += row.consensus_tick ? std::to_string(*row.consensus_tick) : std::string();
    out += ',';
    out += format_double(row.final_spread);
    out += ',';
    out += row.consensus_tick ? '1' : '0';
    out += '\n';
  }
  out += "# converged_fraction=";
  out += format_double(converged_fraction);
  out += '\n';
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("rename to " + path.string() + " failed: " + ec.message());
}

}  // namespace movnet::io
