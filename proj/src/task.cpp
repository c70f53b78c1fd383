// Copyright 2026 The gridpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridpe/task.hpp"

#include <stdexcept>

namespace gridpe {

namespace {

TaskSpec make_spec(const char* name, bool two_swarm, bool agent_by_agent,
                   Outcome ao, Outcome aa, Outcome pve, Outcome evp,
                   CaptureMode mode, bool removes) {
  TaskSpec s;
  s.name = name;
  s.two_swarm_turn_taking = two_swarm;
  s.agent_agent_turn_taking = agent_by_agent;
  s.matrix = {ao, aa, pve, evp};
  s.capture_mode = mode;
  s.capture_removes_evader = removes;
  return s;
}

using enum Outcome;

// One row per variant. Column order: agent-obstacle, agent-agent
// cooperative, pursuer side of P-E, evader side of P-E.
const TaskSpec kRegistry[] = {
    make_spec("-D", false, false, D, D, D, D, CaptureMode::Occupation, true),
    make_spec("-R", false, false, B, R, R, R, CaptureMode::Occupation, true),
    make_spec("-B", false, false, B, B, R, R, CaptureMode::Occupation, true),
    make_spec("-O", false, false, B, R, R, D, CaptureMode::Occupation, true),
    make_spec("-S", false, false, B, R, R, B, CaptureMode::Surrounding, false),
    make_spec("-SB", false, false, B, B, R, B, CaptureMode::Surrounding, false),
    make_spec("-SD", false, false, B, R, R, B,
              CaptureMode::SurroundingDisappear, true),
    make_spec("-SDB", false, false, B, B, R, B,
              CaptureMode::SurroundingDisappear, true),
    make_spec("-TO", true, true, B, R, R, D, CaptureMode::Occupation, true),
};

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const TaskSpec& s : kRegistry) v.push_back(s.name);
    return v;
  }();
  return names;
}

TaskSpec task_spec(const std::string& name) {
  const std::string canonical = name.empty() || name[0] == '-' ? name : "-" + name;
  for (const TaskSpec& s : kRegistry) {
    if (s.name == canonical) return s;
  }
  std::string msg = "unknown task variant '" + name + "'; valid names:";
  for (const TaskSpec& s : kRegistry) msg += " " + s.name;
  throw std::invalid_argument(msg);
}

std::vector<int> check_captures(const WorldState& world, const TaskSpec& spec) {
  std::vector<int> captured;
  for (const AgentRecord& e : world.agents) {
    if (e.role != Role::Evader || !e.alive || e.captured) continue;
    bool caught = false;
    if (spec.capture_mode == CaptureMode::Occupation) {
      for (const AgentRecord& p : world.agents) {
        if (p.role == Role::Pursuer && p.alive && p.position == e.position) {
          caught = true;
          break;
        }
      }
    } else {
      caught = true;
      for (const Position& q : von_neumann_neighbors(e.position, world)) {
        if (world.is_obstacle(q)) continue;
        bool blocked = false;
        for (const AgentRecord& p : world.agents) {
          if (p.role == Role::Pursuer && p.alive && p.position == q) {
            blocked = true;
            break;
          }
        }
        if (!blocked) {
          caught = false;
          break;
        }
      }
    }
    if (caught) captured.push_back(e.id);
  }
  return captured;
}

const char* game_status_name(GameStatus s) {
  switch (s) {
    case GameStatus::Running:         return "running";
    case GameStatus::AllCaptured:     return "all_captured";
    case GameStatus::Truncated:       return "truncated";
    case GameStatus::PursuersExtinct: return "pursuers_extinct";
  }
  return "running";
}

GameStatus is_terminal(const WorldState& world, const TaskSpec& spec) {
  if (world.free_evader_count() == 0) return GameStatus::AllCaptured;
  if (world.alive_count(Role::Pursuer) == 0) return GameStatus::PursuersExtinct;
  if (world.step_index >= spec.max_steps) return GameStatus::Truncated;
  return GameStatus::Running;
}

}  // namespace gridpe
