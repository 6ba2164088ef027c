#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "movnet/engine.hpp"
#include "movnet/graph.hpp"
#include "movnet/meeting_time.hpp"

namespace movnet::io {

// Insertion-ordered JSON keeps emitted files stable field-for-field.
using Json = nlohmann::ordered_json;

// 17 significant digits via to_chars: locale-independent and byte-stable.
std::string format_double(double v);

// Long-format trajectory: header "t,agent,node,state", one row per agent per
// tick, LF line endings.
std::string trajectory_csv(const Trajectory& trajectory);

// {consensus_tick, final_spread, consensus_value, config}; config echoes every
// effective setting including the seed, schedule assignment, and warnings.
Json summary_json(const Trajectory& trajectory);

Json report_json(const GraphReport& report);

Json schedule_json(const CouplingSchedule& schedule);

// expected_steps becomes null with reason "parity-trapped" when infinite.
Json meeting_report_json(const MeetingTimeReport& report);

struct SweepRow {
  std::uint64_t seed;
  double epsilon;
  std::optional<long> consensus_tick;
  double final_spread;
};

// Header "seed,epsilon,consensus_tick,final_spread,converged" plus a trailing
// "# converged_fraction=..." aggregate line.
std::string sweep_csv(const std::vector<SweepRow>& rows, double converged_fraction);

// Write-temp-then-rename so readers never observe partial files.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace movnet::io
