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

#ifndef GRIDPE_TASK_H_
#define GRIDPE_TASK_H_

#include <string>
#include <vector>

#include "gridpe/collision.hpp"
#include "gridpe/world.hpp"

namespace gridpe {

struct TaskSpec {
  std::string name;
  bool two_swarm_turn_taking = false;
  bool agent_agent_turn_taking = false;
  OutcomeMatrix matrix;
  CaptureMode capture_mode = CaptureMode::Occupation;
  int max_steps = 500;
  bool capture_removes_evader = true;
};

// The nine registry variants, all usable as CLI/config tokens. Leading-dash
// and bare spellings are both accepted ("-S" and "S").
const std::vector<std::string>& task_names();

// Exact registry row for one of the nine names; throws std::invalid_argument
// listing the valid names otherwise.
TaskSpec task_spec(const std::string& name);

// Evaders newly captured by the current world configuration. Occupation:
// an alive uncaptured evader sharing a cell with an alive pursuer.
// Surrounding modes: an alive uncaptured evader whose every in-bounds
// 4-neighbor holds an obstacle or an alive pursuer; out-of-bounds neighbors
// count as blocked. Variants that kill the evader on contact never reach
// this predicate for those contacts; the environment derives their captures
// from the resolution report instead.
std::vector<int> check_captures(const WorldState& world, const TaskSpec& spec);

enum class GameStatus : int {
  Running = 0,
  AllCaptured = 1,
  Truncated = 2,
  PursuersExtinct = 3,
};

const char* game_status_name(GameStatus s);

// AllCaptured wins over PursuersExtinct when both hold; truncation is
// checked last so a capture on the final step still ends the game properly.
GameStatus is_terminal(const WorldState& world, const TaskSpec& spec);

}  // namespace gridpe

#endif  // GRIDPE_TASK_H_
