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

#include "gridpe/observation.hpp"

#include <stdexcept>

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

int nonzeros(const Observation& obs, int channel, int fov) {
  const int cells = (2 * fov + 1) * (2 * fov + 1);
  int count = 0;
  for (int i = 0; i < cells; ++i) {
    if (obs.data[channel * cells + i] != 0.0f) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("window length follows the three-channel layout") {
  CHECK(observation_length(5) == 365);
  CHECK(observation_length(2) == 77);
  CHECK(observation_length(0) == 5);
  const WorldState w = make_world(20, 20, {}, {{Role::Pursuer, {10, 10}}});
  for (int fov : {0, 1, 2, 5}) {
    CHECK(observe(w, 0, fov).data.size() ==
          static_cast<std::size_t>(observation_length(fov)));
  }
}

TEST_CASE("an empty interior sees nothing but its own coordinates") {
  const WorldState w = make_world(20, 20, {}, {{Role::Pursuer, {10, 10}}});
  const Observation obs = observe(w, 0, 5);
  CHECK(nonzeros(obs, 0, 5) == 0);
  CHECK(nonzeros(obs, 1, 5) == 0);
  CHECK(nonzeros(obs, 2, 5) == 0);
  CHECK(obs.data[363] == doctest::Approx(10.0f / 19).epsilon(1e-6));
  CHECK(obs.data[364] == doctest::Approx(10.0f / 19).epsilon(1e-6));
}

TEST_CASE("corner padding marks out-of-bounds cells as blockers") {
  // An 11x11 window centered on the corner keeps the 6x6 quadrant of
  // offsets 0..5 in bounds, so 121 - 36 = 85 cells pad as blockers.
  const WorldState w = make_world(20, 20, {}, {{Role::Pursuer, {0, 0}}});
  const Observation obs = observe(w, 0, 5);
  CHECK(nonzeros(obs, 0, 5) == 85);
  CHECK(obs.data[3 * 121] == 0.0f);
  CHECK(obs.data[3 * 121 + 1] == 0.0f);

  // Near the corner at (1,2) the window keeps 7x8 cells: 65 blockers.
  const WorldState w2 = make_world(20, 20, {}, {{Role::Pursuer, {1, 2}}});
  CHECK(nonzeros(observe(w2, 0, 5), 0, 5) == 121 - 56);
}

TEST_CASE("an edge seat pads exactly the off-grid half") {
  // Centered on the top edge: rows -5..-1 of the window are off grid.
  const WorldState w = make_world(20, 20, {}, {{Role::Pursuer, {0, 10}}});
  CHECK(nonzeros(observe(w, 0, 5), 0, 5) == 5 * 11);
}

TEST_CASE("teammates and opponents land in their channels at the right offset") {
  const WorldState w = make_world(
      20, 20, {},
      {{Role::Pursuer, {10, 10}}, {Role::Pursuer, {11, 10}},
       {Role::Evader, {10, 12}}});
  const Observation obs = observe(w, 0, 5);
  const int cells = 121;
  CHECK(nonzeros(obs, 1, 5) == 1);
  CHECK(nonzeros(obs, 2, 5) == 1);
  // Teammate at offset (+1, 0) -> window cell (6, 5).
  CHECK(obs.data[cells + 6 * 11 + 5] == 1.0f);
  // Opponent at offset (0, +2) -> window cell (5, 7).
  CHECK(obs.data[2 * cells + 5 * 11 + 7] == 1.0f);
  // The viewpoint never sees itself.
  CHECK(obs.data[cells + 5 * 11 + 5] == 0.0f);

  // Roles flip when the evader looks back.
  const Observation evader_view = observe(w, 2, 5);
  CHECK(nonzeros(evader_view, 1, 5) == 0);
  CHECK(nonzeros(evader_view, 2, 5) == 2);
}

TEST_CASE("obstacles appear in the blocker channel") {
  const WorldState w =
      make_world(20, 20, {{10, 11}}, {{Role::Pursuer, {10, 10}}});
  const Observation obs = observe(w, 0, 2);
  CHECK(nonzeros(obs, 0, 2) == 1);
  CHECK(obs.data[2 * 5 + 3] == 1.0f);
}

TEST_CASE("frozen evaders stay visible, dead agents vanish") {
  WorldState w = make_world(
      20, 20, {},
      {{Role::Pursuer, {10, 10}}, {Role::Evader, {10, 11}},
       {Role::Evader, {10, 9}}});
  w.agents[1].captured = true;
  w.agents[2].alive = false;
  const Observation obs = observe(w, 0, 2);
  // Only the frozen evader remains, in the opponent channel.
  CHECK(nonzeros(obs, 2, 2) == 1);
  CHECK(obs.data[2 * 25 + 2 * 5 + 3] == 1.0f);
  CHECK(nonzeros(obs, 0, 2) == 0);
}

TEST_CASE("observing a dead or missing agent fails") {
  WorldState w = make_world(20, 20, {}, {{Role::Pursuer, {10, 10}}});
  CHECK_THROWS_AS(observe(w, 3, 2), std::invalid_argument);
  w.agents[0].alive = false;
  CHECK_THROWS_AS(observe(w, 0, 2), std::invalid_argument);
}

TEST_CASE("agents outside the window are invisible") {
  const WorldState w = make_world(
      20, 20, {}, {{Role::Pursuer, {10, 10}}, {Role::Evader, {10, 13}}});
  CHECK(nonzeros(observe(w, 0, 2), 2, 2) == 0);
  CHECK(nonzeros(observe(w, 0, 3), 2, 3) == 1);
}
