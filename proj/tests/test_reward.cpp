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

#include "gridpe/reward.hpp"

#include <vector>

#include "doctest.h"

using namespace gridpe;

namespace {

const RewardTable kTable;

WorldState make_world(std::vector<std::pair<Role, Position>> agents) {
  WorldState w;
  w.width = 10;
  w.height = 10;
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

CollisionEvent make_event(CollisionType type, std::vector<int> participants) {
  CollisionEvent e;
  e.type = type;
  e.kind = EventKind::Vertex;
  e.participants = std::move(participants);
  e.applied.assign(e.participants.size(), Outcome::B);
  return e;
}

CollisionReport make_report(std::vector<CollisionEvent> events) {
  CollisionReport r;
  for (CollisionEvent& e : events) {
    r.counts_by_type[static_cast<int>(e.type)] += 1;
    r.events.push_back(std::move(e));
  }
  return r;
}

}  // namespace

TEST_CASE("a quiet tick charges everyone the step cost") {
  const WorldState w = make_world(
      {{Role::Pursuer, {0, 0}}, {Role::Evader, {9, 9}}});
  const auto r = compute_rewards({}, {}, w, w, kTable);
  REQUIRE(r.size() == 2);
  CHECK(r.at(0) == -0.05);
  CHECK(r.at(1) == -0.05);
}

TEST_CASE("an occupation capture pays both sides of the contact") {
  const WorldState before = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Evader, {2, 3}}});
  WorldState after = before;
  after.agents[0].position = {2, 3};
  const CollisionReport report =
      make_report({make_event(CollisionType::PursuerEvader, {0, 1})});
  const std::vector<Capture> captures{{1, {0}, {0}}};
  const auto r = compute_rewards(report, captures, before, after, kTable);
  CHECK(r.at(0) == 10.0 - 0.05);   // capture event exempt from collide
  CHECK(r.at(1) == -10.0 - 0.05);  // co-located, not adjacent
}

TEST_CASE("a collision while adjacent to prey nets -11.95") {
  const WorldState w = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Pursuer, {4, 4}},
       {Role::Evader, {2, 3}}});
  const CollisionReport report =
      make_report({make_event(CollisionType::AgentAgentCooperative, {0, 1})});
  const auto r = compute_rewards(report, {}, w, w, kTable);
  CHECK(r.at(0) == -12.0 + 0.1 - 0.05);
  CHECK(r.at(1) == -12.0 - 0.05);  // not adjacent to any evader
  CHECK(r.at(2) == -0.1 - 0.05);   // neighbored by agent 0
}

TEST_CASE("a surrounding capture rewards all four blockers") {
  const WorldState w = make_world(
      {{Role::Pursuer, {4, 5}}, {Role::Pursuer, {6, 5}},
       {Role::Pursuer, {5, 4}}, {Role::Pursuer, {5, 6}},
       {Role::Evader, {5, 5}}});
  // Post-move, pre-capture: the evader is still unflagged, so the blockers
  // also earn the adjacency bonus.
  const std::vector<Capture> captures{{4, {0, 1, 2, 3}, {}}};
  const auto r = compute_rewards({}, captures, w, w, kTable);
  for (int p = 0; p < 4; ++p) CHECK(r.at(p) == 10.0 + 0.1 - 0.05);
  CHECK(r.at(4) == -10.0 - 0.1 - 0.05);
}

TEST_CASE("a corner capture pays both blockers") {
  const WorldState w = make_world(
      {{Role::Pursuer, {0, 1}}, {Role::Pursuer, {1, 0}},
       {Role::Evader, {0, 0}}});
  const std::vector<Capture> captures{{2, {0, 1}, {}}};
  const auto r = compute_rewards({}, captures, w, w, kTable);
  CHECK(r.at(0) == 10.0 + 0.1 - 0.05);
  CHECK(r.at(1) == 10.0 + 0.1 - 0.05);
  CHECK(r.at(2) == -10.0 - 0.1 - 0.05);
}

TEST_CASE("being neighbored alone costs the evader 0.15") {
  const WorldState w = make_world(
      {{Role::Pursuer, {3, 3}}, {Role::Evader, {3, 4}}});
  const auto r = compute_rewards({}, {}, w, w, kTable);
  CHECK(r.at(0) == 0.1 - 0.05);
  CHECK(r.at(1) == -0.1 - 0.05);
}

TEST_CASE("collision penalties stack per event") {
  const WorldState w = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Pursuer, {2, 4}},
       {Role::Pursuer, {4, 2}}});
  const CollisionReport report = make_report(
      {make_event(CollisionType::AgentAgentCooperative, {0, 1}),
       make_event(CollisionType::AgentAgentCooperative, {0, 2})});
  const auto r = compute_rewards(report, {}, w, w, kTable);
  CHECK(r.at(0) == -12.0 + -12.0 - 0.05);
  CHECK(r.at(1) == -12.0 - 0.05);
  CHECK(r.at(2) == -12.0 - 0.05);
}

TEST_CASE("an isolated obstacle bump costs 12.05") {
  const WorldState w = make_world({{Role::Pursuer, {2, 2}}});
  const CollisionReport report =
      make_report({make_event(CollisionType::AgentObstacle, {0})});
  const auto r = compute_rewards(report, {}, w, w, kTable);
  CHECK(r.at(0) == -12.0 - 0.05);
}

TEST_CASE("a denied swap bills both sides plus their adjacency terms") {
  const WorldState w = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Evader, {2, 3}}});
  const CollisionReport report =
      make_report({make_event(CollisionType::PursuerEvader, {0, 1})});
  const auto r = compute_rewards(report, {}, w, w, kTable);
  CHECK(r.at(0) == -12.0 + 0.1 - 0.05);
  CHECK(r.at(1) == -12.0 - 0.1 - 0.05);
}

TEST_CASE("simultaneous strikers each earn full capture credit") {
  // Two pursuers kill one evader together; their own cooperative contest
  // stays a billed collision while both kill events are exempt.
  const WorldState before = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Pursuer, {3, 3}},
       {Role::Evader, {2, 3}}});
  WorldState after = before;
  after.agents[0].position = {2, 3};
  after.agents[1].position = {2, 3};
  after.agents[2].alive = false;
  const CollisionReport report = make_report(
      {make_event(CollisionType::PursuerEvader, {0, 2}),
       make_event(CollisionType::PursuerEvader, {1, 2}),
       make_event(CollisionType::AgentAgentCooperative, {0, 1})});
  const std::vector<Capture> captures{{2, {0, 1}, {0, 1}}};
  const auto r = compute_rewards(report, captures, before, after, kTable);
  CHECK(r.at(0) == 10.0 - 12.0 - 0.05);
  CHECK(r.at(1) == 10.0 - 12.0 - 0.05);
  CHECK(r.at(2) == -10.0 - 0.05);
}

TEST_CASE("mutual destruction still pays the dead capturer") {
  const WorldState before = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Evader, {2, 4}}});
  WorldState after = before;
  after.agents[0].alive = false;
  after.agents[1].alive = false;
  const CollisionReport report =
      make_report({make_event(CollisionType::PursuerEvader, {0, 1})});
  const std::vector<Capture> captures{{1, {0}, {0}}};
  const auto r = compute_rewards(report, captures, before, after, kTable);
  CHECK(r.at(0) == 10.0 - 0.05);
  CHECK(r.at(1) == -10.0 - 0.05);
}

TEST_CASE("half-step captures charge the step cost to actors only") {
  const WorldState before = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Evader, {2, 3}}});
  WorldState after = before;
  after.agents[0].position = {2, 3};
  after.agents[1].alive = false;
  const CollisionReport report =
      make_report({make_event(CollisionType::PursuerEvader, {0, 1})});
  const std::vector<Capture> captures{{1, {0}, {0}}};
  const std::vector<int> actors{0};
  const auto r =
      compute_rewards(report, captures, before, after, kTable, &actors);
  CHECK(r.at(0) == 10.0 - 0.05);
  CHECK(r.at(1) == -10.0);  // victim did not act this half-step
}

TEST_CASE("frozen evaders absorb bumps without rewards of their own") {
  WorldState before = make_world(
      {{Role::Pursuer, {2, 2}}, {Role::Evader, {2, 3}}});
  before.agents[1].captured = true;
  const CollisionReport report =
      make_report({make_event(CollisionType::PursuerEvader, {0, 1})});
  const auto r = compute_rewards(report, {}, before, before, kTable);
  REQUIRE(r.size() == 1);
  // No adjacency bonus off a frozen body, just the bump and the step.
  CHECK(r.at(0) == -12.0 - 0.05);
}

TEST_CASE("the adjacency bonus is binary") {
  const WorldState w = make_world(
      {{Role::Pursuer, {5, 5}}, {Role::Evader, {5, 4}},
       {Role::Evader, {5, 6}}});
  const auto r = compute_rewards({}, {}, w, w, kTable);
  CHECK(r.at(0) == 0.1 - 0.05);
  CHECK(r.at(1) == -0.1 - 0.05);
  CHECK(r.at(2) == -0.1 - 0.05);
}

TEST_CASE("agents dead at tick start earn nothing") {
  WorldState w = make_world(
      {{Role::Pursuer, {0, 0}}, {Role::Pursuer, {5, 5}},
       {Role::Evader, {9, 9}}});
  w.agents[0].alive = false;
  const auto r = compute_rewards({}, {}, w, w, kTable);
  CHECK(r.size() == 2);
  CHECK(r.count(0) == 0);
}
