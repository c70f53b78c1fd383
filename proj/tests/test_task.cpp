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
#include <string>
#include <vector>

#include "doctest.h"

using namespace gridpe;

namespace {

WorldState make_world(int width, int height, std::set<Position> obstacles,
                      std::vector<std::pair<Role, Position>> agents) {
  WorldState w;
  w.width = width;
  w.height = height;
  w.obstacles = std::move(obstacles);
  int id = 0;
  for (const auto& [role, pos] : agents) {
    AgentRecord r;
    r.id = id++;
    r.role = role;
    r.position = pos;
    w.agents.push_back(r);
  }
  return w;
}

void check_row(const std::string& name, bool two_swarm, bool agent_by_agent,
               Outcome ao, Outcome aa, Outcome pve, Outcome evp,
               CaptureMode mode, bool removes) {
  const TaskSpec s = task_spec(name);
  CHECK(s.name == name);
  CHECK(s.two_swarm_turn_taking == two_swarm);
  CHECK(s.agent_agent_turn_taking == agent_by_agent);
  CHECK(s.matrix.agent_obstacle == ao);
  CHECK(s.matrix.agent_agent == aa);
  CHECK(s.matrix.pursuer_vs_evader == pve);
  CHECK(s.matrix.evader_vs_pursuer == evp);
  CHECK(s.capture_mode == mode);
  CHECK(s.capture_removes_evader == removes);
}

}  // namespace

TEST_CASE("the registry carries all nine variant rows exactly") {
  using enum Outcome;
  check_row("-D", false, false, D, D, D, D, CaptureMode::Occupation, true);
  check_row("-R", false, false, B, R, R, R, CaptureMode::Occupation, true);
  check_row("-B", false, false, B, B, R, R, CaptureMode::Occupation, true);
  check_row("-O", false, false, B, R, R, D, CaptureMode::Occupation, true);
  check_row("-S", false, false, B, R, R, B, CaptureMode::Surrounding, false);
  check_row("-SB", false, false, B, B, R, B, CaptureMode::Surrounding, false);
  check_row("-SD", false, false, B, R, R, B,
            CaptureMode::SurroundingDisappear, true);
  check_row("-SDB", false, false, B, B, R, B,
            CaptureMode::SurroundingDisappear, true);
  check_row("-TO", true, true, B, R, R, D, CaptureMode::Occupation, true);

  CHECK(task_names().size() == 9);
  // The only variant with turn-taking flags.
  for (const std::string& name : task_names()) {
    const TaskSpec s = task_spec(name);
    CHECK((s.two_swarm_turn_taking && s.agent_agent_turn_taking) ==
          (name == "-TO"));
  }
}

TEST_CASE("lookup accepts bare spellings and is a pure function") {
  CHECK(task_spec("S").name == "-S");
  CHECK(task_spec("SDB").name == "-SDB");
  const TaskSpec a = task_spec("-O");
  const TaskSpec b = task_spec("-O");
  CHECK(a.matrix.evader_vs_pursuer == b.matrix.evader_vs_pursuer);
  CHECK(a.max_steps == b.max_steps);
  CHECK(a.max_steps == 500);
}

TEST_CASE("unknown variants fail listing every valid name") {
  try {
    task_spec("-Q");
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    for (const std::string& name : task_names()) {
      CHECK(msg.find(name) != std::string::npos);
    }
  }
}

TEST_CASE("occupation capture detects co-location") {
  const TaskSpec spec = task_spec("-R");
  WorldState w = make_world(
      8, 8, {}, {{Role::Pursuer, {3, 3}}, {Role::Evader, {3, 3}},
                 {Role::Evader, {5, 5}}});
  CHECK(check_captures(w, spec) == std::vector<int>{1});
  // A dead pursuer captures nothing.
  w.agents[0].alive = false;
  CHECK(check_captures(w, spec).empty());
}

TEST_CASE("surrounding capture needs every neighbor blocked") {
  const TaskSpec spec = task_spec("-S");
  WorldState w = make_world(
      10, 10, {},
      {{Role::Pursuer, {4, 5}}, {Role::Pursuer, {6, 5}},
       {Role::Pursuer, {5, 4}}, {Role::Pursuer, {5, 6}},
       {Role::Evader, {5, 5}}});
  CHECK(check_captures(w, spec) == std::vector<int>{4});

  // Three of four neighbors is not enough.
  w.agents[3].position = {0, 0};
  CHECK(check_captures(w, spec).empty());

  // An obstacle may serve as the fourth blocker.
  w.obstacles.insert({5, 6});
  CHECK(check_captures(w, spec) == std::vector<int>{4});
}

TEST_CASE("boundaries count as blockers in surrounding capture") {
  const TaskSpec spec = task_spec("-SB");
  const WorldState w = make_world(
      10, 10, {},
      {{Role::Pursuer, {0, 1}}, {Role::Pursuer, {1, 0}},
       {Role::Evader, {0, 0}}});
  CHECK(check_captures(w, spec) == std::vector<int>{2});
}

TEST_CASE("adding pursuers never un-captures an evader") {
  const TaskSpec spec = task_spec("-S");
  WorldState w = make_world(
      10, 10, {{4, 5}},
      {{Role::Pursuer, {6, 5}}, {Role::Pursuer, {5, 4}},
       {Role::Pursuer, {5, 6}}, {Role::Evader, {5, 5}}});
  REQUIRE(check_captures(w, spec) == std::vector<int>{3});
  AgentRecord extra;
  extra.id = 4;
  extra.role = Role::Pursuer;
  extra.position = {7, 7};
  w.agents.push_back(extra);
  CHECK(check_captures(w, spec) == std::vector<int>{3});
}

TEST_CASE("already captured or dead evaders are not re-captured") {
  const TaskSpec spec = task_spec("-S");
  WorldState w = make_world(
      10, 10, {},
      {{Role::Pursuer, {0, 1}}, {Role::Pursuer, {1, 0}},
       {Role::Evader, {0, 0}}});
  w.agents[2].captured = true;
  CHECK(check_captures(w, spec).empty());
  w.agents[2].captured = false;
  w.agents[2].alive = false;
  CHECK(check_captures(w, spec).empty());
}

TEST_CASE("terminal status ranks capture, extinction, truncation") {
  const TaskSpec spec = task_spec("-D");
  WorldState w = make_world(
      6, 6, {}, {{Role::Pursuer, {0, 0}}, {Role::Evader, {5, 5}}});
  CHECK(is_terminal(w, spec) == GameStatus::Running);

  // No free evader left: all captured, even with pursuers also gone.
  w.agents[1].alive = false;
  CHECK(is_terminal(w, spec) == GameStatus::AllCaptured);
  w.agents[0].alive = false;
  CHECK(is_terminal(w, spec) == GameStatus::AllCaptured);

  // Evaders remain but every pursuer crashed.
  w.agents[1].alive = true;
  CHECK(is_terminal(w, spec) == GameStatus::PursuersExtinct);

  // Truncation applies only when nothing else ended the game.
  w.agents[0].alive = true;
  w.step_index = spec.max_steps;
  CHECK(is_terminal(w, spec) == GameStatus::Truncated);
  w.agents[1].alive = false;
  CHECK(is_terminal(w, spec) == GameStatus::AllCaptured);
}

TEST_CASE("frozen evaders count as captured for termination") {
  const TaskSpec spec = task_spec("-S");
  WorldState w = make_world(
      6, 6, {}, {{Role::Pursuer, {0, 0}}, {Role::Evader, {5, 5}}});
  w.agents[1].captured = true;  // alive but frozen
  CHECK(is_terminal(w, spec) == GameStatus::AllCaptured);
}
