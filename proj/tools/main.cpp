// movnet CLI: graph generation/verification, consensus runs, seed sweeps, and
// meeting-time reports. Exit codes: 0 success, 1 failed --expect assertion,
// 2 usage/config/parse error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "movnet/engine.hpp"
#include "movnet/graph.hpp"
#include "movnet/io.hpp"
#include "movnet/meeting_time.hpp"

namespace {

using movnet::io::Json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw movnet::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --graph accepts the builtin name "petersen" or an edge-list path.
movnet::Graph load_graph(const std::string& spec) {
  if (spec == "petersen") return movnet::petersen();
  return movnet::parse_edge_list(slurp(spec));
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw movnet::ConfigInvalidError(what + " is a number, got \"" + text + "\"");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

movnet::InitPolicy parse_init(const std::string& text) {
  if (text.rfind("uniform:", 0) == 0) {
    const auto parts = split(text.substr(8), ',');
    if (parts.size() != 2) throw movnet::ConfigInvalidError("--init uniform:lo,hi");
    return movnet::UniformInit{parse_number<double>(parts[0], "--init lo"),
                               parse_number<double>(parts[1], "--init hi")};
  }
  if (text.rfind("explicit:", 0) == 0) {
    movnet::StateVector values;
    for (const auto& tok : split(text.substr(9), ',')) {
      values.push_back(parse_number<double>(tok, "--init value"));
    }
    return movnet::ExplicitInit{std::move(values)};
  }
  throw movnet::ConfigInvalidError("--init is uniform:lo,hi or explicit:v1,...,vN");
}

struct RunFlags {
  std::string graph_spec = "petersen";
  int agents = 0;
  double epsilon = 0.0;
  double alpha = 0.0;
  bool has_epsilon = false;
  bool has_alpha = false;
  long steps = 0;
  std::uint64_t seed = 0;
  std::string family = "const:1";
  std::string init = "uniform:0,1";
  double tol = 1e-6;
  std::string out_prefix;
};

void add_run_flags(CLI::App& cmd, RunFlags& flags, bool with_seed) {
  cmd.add_option("--graph", flags.graph_spec, "petersen or an edge-list path")
      ->capture_default_str();
  cmd.add_option("--agents", flags.agents, "number of agents")->required();
  auto* eps = cmd.add_option("--epsilon", flags.epsilon, "fixed step size");
  auto* alpha = cmd.add_option("--alpha", flags.alpha, "auto step size: epsilon = alpha/delta_sup");
  eps->excludes(alpha);
  alpha->excludes(eps);
  cmd.add_option("--steps", flags.steps, "tick horizon")->required();
  if (with_seed) cmd.add_option("--seed", flags.seed, "master seed")->required();
  cmd.add_option("--family", flags.family, "coupling family, e.g. const:1,sin,cos,expdec:0.1")
      ->capture_default_str();
  cmd.add_option("--init", flags.init, "uniform:lo,hi or explicit:v1,...,vN")
      ->capture_default_str();
  cmd.add_option("--tol", flags.tol, "consensus spread tolerance")->capture_default_str();
  cmd.add_option("--out", flags.out_prefix, "output path prefix")->required();
  cmd.callback([eps, alpha, &flags] {
    flags.has_epsilon = eps->count() > 0;
    flags.has_alpha = alpha->count() > 0;
  });
}

movnet::SimConfig make_config(const RunFlags& flags) {
  movnet::SimConfig cfg;
  cfg.graph = load_graph(flags.graph_spec);
  cfg.graph_source = flags.graph_spec;
  cfg.agents = flags.agents;
  if (flags.has_epsilon == flags.has_alpha) {
    throw movnet::ConfigInvalidError("exactly one of --epsilon and --alpha");
  }
  if (flags.has_epsilon) {
    cfg.epsilon_policy = movnet::FixedEpsilon{flags.epsilon};
  } else {
    cfg.epsilon_policy = movnet::AutoEpsilon{flags.alpha};
  }
  cfg.horizon = flags.steps;
  cfg.seed = flags.seed;
  cfg.schedule_family = movnet::CouplingFunction::parse_family(flags.family);
  cfg.init = parse_init(flags.init);
  cfg.consensus_tol = flags.tol;
  return cfg;
}

void print_warnings(const movnet::Trajectory& trajectory) {
  for (const std::string& w : trajectory.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_graph_gen(const std::string& kind, const std::string& in_path,
                  const std::string& out_path) {
  movnet::Graph g;
  if (kind == "petersen") {
    g = movnet::petersen();
  } else if (kind == "edge-list") {
    if (in_path.empty()) throw movnet::ConfigInvalidError("--kind edge-list requires --in");
    g = movnet::parse_edge_list(slurp(in_path));
  } else {
    throw movnet::ConfigInvalidError("--kind is petersen or edge-list");
  }
  movnet::io::write_file_atomic(out_path, movnet::to_edge_list(g));
  return 0;
}

// "key=value" assertions against the report JSON; value is true/false, an
// integer, or none (for absent optionals).
int check_expectations(const Json& report, const std::vector<std::string>& expects) {
  int failures = 0;
  for (const std::string& expect : expects) {
    const auto eq = expect.find('=');
    if (eq == std::string::npos) {
      throw movnet::ConfigInvalidError("--expect takes key=value, got \"" + expect + "\"");
    }
    std::string key = expect.substr(0, eq);
    const std::string value = expect.substr(eq + 1);
    std::string field = key;
    for (char& c : field) {
      if (c == '-') c = '_';
    }
    if (field == "hamiltonian_path" || field == "hamiltonian_cycle") field = "has_" + field;
    if (!report.contains(field)) {
      throw movnet::ConfigInvalidError("unknown --expect key \"" + key + "\"");
    }
    Json expected;
    if (value == "true") {
      expected = true;
    } else if (value == "false") {
      expected = false;
    } else if (value == "none") {
      expected = nullptr;
    } else {
      expected = parse_number<long>(value, "--expect " + key);
    }
    if (report.at(field) != expected) {
      std::cerr << "expect failed: " << key << ": expected " << expected.dump() << ", got "
                << report.at(field).dump() << "\n";
      ++failures;
    }
  }
  return failures;
}

int cmd_run(const RunFlags& flags) {
  const movnet::Trajectory trajectory = movnet::run(make_config(flags));
  print_warnings(trajectory);
  movnet::io::write_file_atomic(flags.out_prefix + ".traj.csv",
                                movnet::io::trajectory_csv(trajectory));
  const Json summary = movnet::io::summary_json(trajectory);
  movnet::io::write_file_atomic(flags.out_prefix + ".summary.json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const RunFlags& flags, const std::string& seeds_range,
              const std::string& epsilon_grid) {
  const auto range = split(seeds_range, '.');
  // "S0..S1" splits into {S0, "", S1}.
  if (range.size() != 3 || !range[1].empty()) {
    throw movnet::ConfigInvalidError("--seeds takes an inclusive range S0..S1");
  }
  const auto seed_lo = parse_number<std::uint64_t>(range[0], "--seeds lower bound");
  const auto seed_hi = parse_number<std::uint64_t>(range[2], "--seeds upper bound");
  if (seed_lo > seed_hi) throw movnet::ConfigInvalidError("--seeds range is nonempty");

  std::vector<std::optional<double>> epsilons;
  if (!epsilon_grid.empty()) {
    for (const auto& tok : split(epsilon_grid, ',')) {
      epsilons.push_back(parse_number<double>(tok, "--epsilon-grid value"));
    }
  } else {
    epsilons.push_back(std::nullopt);  // use the --epsilon/--alpha policy
  }

  std::vector<movnet::io::SweepRow> rows;
  long converged = 0;
  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    for (const auto& eps : epsilons) {
      RunFlags one = flags;
      one.seed = seed;
      if (eps) {
        one.epsilon = *eps;
        one.has_epsilon = true;
        one.has_alpha = false;
      }
      const movnet::Trajectory trajectory = movnet::run(make_config(one));
      rows.push_back({seed, trajectory.epsilon, trajectory.consensus_tick,
                      trajectory.final_spread});
      if (trajectory.consensus_tick) ++converged;
    }
  }
  const double fraction = static_cast<double>(converged) / static_cast<double>(rows.size());
  movnet::io::write_file_atomic(flags.out_prefix + ".sweep.csv",
                                movnet::io::sweep_csv(rows, fraction));
  std::cout << "converged_fraction=" << movnet::io::format_double(fraction) << "\n";
  return 0;
}

int cmd_meeting_time(const std::string& graph_spec, const std::string& start,
                     const std::string& method, long trials, long cap, std::uint64_t seed,
                     int max_vertices) {
  const auto parts = split(start, ',');
  if (parts.size() != 2) throw movnet::ConfigInvalidError("--start takes u,v");
  const int u = parse_number<int>(parts[0], "--start u");
  const int v = parse_number<int>(parts[1], "--start v");
  const movnet::Graph g = load_graph(graph_spec);
  movnet::MeetingTimeReport report;
  if (method == "exact") {
    report = movnet::exact_meeting_time(g, u, v, max_vertices);
  } else if (method == "mc") {
    report = movnet::empirical_meeting_time(g, u, v, trials, cap, seed);
  } else {
    throw movnet::ConfigInvalidError("--method is exact or mc");
  }
  std::cout << movnet::io::meeting_report_json(report).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consensus over moving-neighborhood networks"};
  app.require_subcommand(1);

  // graph gen / graph check
  auto* graph_cmd = app.add_subcommand("graph", "generate and verify graphs");
  graph_cmd->require_subcommand(1);

  std::string gen_kind = "petersen";
  std::string gen_in;
  std::string gen_out;
  auto* gen = graph_cmd->add_subcommand("gen", "write an edge-list file");
  gen->add_option("--kind", gen_kind, "petersen or edge-list")->capture_default_str();
  gen->add_option("--in", gen_in, "source edge list (for --kind edge-list)");
  gen->add_option("--out", gen_out, "output path")->required();

  std::string check_in;
  bool check_deep = false;
  int check_cap = 24;
  std::vector<std::string> check_expects;
  auto* check = graph_cmd->add_subcommand("check", "print a structural report as JSON");
  check->add_option("--in", check_in, "edge-list path")->required();
  check->add_flag("--deep", check_deep, "also verify every vertex-deleted subgraph");
  check->add_option("--cap", check_cap, "exact-search vertex cap")->capture_default_str();
  check->add_option("--expect", check_expects, "assert report fields, e.g. hamiltonian-cycle=false");

  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "simulate one consensus run");
  add_run_flags(*run_cmd, run_flags, /*with_seed=*/true);

  RunFlags sweep_flags;
  std::string sweep_seeds;
  std::string sweep_grid;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a seed sweep and aggregate convergence");
  add_run_flags(*sweep_cmd, sweep_flags, /*with_seed=*/false);
  sweep_cmd->add_option("--seeds", sweep_seeds, "inclusive seed range S0..S1")->required();
  sweep_cmd->add_option("--epsilon-grid", sweep_grid, "comma-separated fixed epsilons");

  std::string mt_graph = "petersen";
  std::string mt_start;
  std::string mt_method = "exact";
  long mt_trials = 100000;
  long mt_cap = 100000;
  std::uint64_t mt_seed = 0;
  int mt_max_vertices = 40;
  auto* mt_cmd = app.add_subcommand("meeting-time", "two-walker meeting time report");
  mt_cmd->add_option("--graph", mt_graph, "petersen or an edge-list path")->capture_default_str();
  mt_cmd->add_option("--start", mt_start, "start pair u,v")->required();
  mt_cmd->add_option("--method", mt_method, "exact or mc")->capture_default_str();
  mt_cmd->add_option("--trials", mt_trials, "Monte Carlo trials")->capture_default_str();
  mt_cmd->add_option("--cap", mt_cap, "per-trial step cap")->capture_default_str();
  mt_cmd->add_option("--seed", mt_seed, "Monte Carlo master seed")->capture_default_str();
  mt_cmd->add_option("--max-vertices", mt_max_vertices, "exact product-chain cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_graph_gen(gen_kind, gen_in, gen_out);
    if (check->parsed()) {
      const movnet::Graph g = movnet::parse_edge_list(slurp(check_in));
      const movnet::GraphReport report =
          movnet::analyze(g, {.deep = check_deep, .max_exact_vertices = check_cap});
      const Json json = movnet::io::report_json(report);
      std::cout << json.dump(2) << "\n";
      return check_expectations(json, check_expects) == 0 ? 0 : 1;
    }
    if (run_cmd->parsed()) return cmd_run(run_flags);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags, sweep_seeds, sweep_grid);
    if (mt_cmd->parsed()) {
      return cmd_meeting_time(mt_graph, mt_start, mt_method, mt_trials, mt_cap, mt_seed,
                              mt_max_vertices);
    }
  } catch (const movnet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
