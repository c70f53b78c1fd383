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

#ifndef GRIDPE_REWARD_H_
#define GRIDPE_REWARD_H_

#include <map>
#include <vector>

#include "gridpe/collision.hpp"
#include "gridpe/world.hpp"

namespace gridpe {

struct RewardTable {
  double capture = 10.0;
  double being_captured = -10.0;
  double neighbor = 0.1;
  double being_neighbored = -0.1;
  double collide = -12.0;
  double step_cost = -0.05;
};

// One evader caught this tick. capturer_ids are the pursuers credited
// (landing/co-locating for occupation capture, the blocking neighbors for
// surrounding capture). event_indices name the report events that WERE the
// capture, if any; those events are rewarded as capture, not as collisions.
// Surrounding captures leave it empty: a bounce off the quarry is still a
// penalized collision there.
struct Capture {
  int evader_id = 0;
  std::vector<int> capturer_ids;
  std::vector<int> event_indices;
};

// Additive Table-style composition over one tick. world_after is the
// post-move, pre-capture-application world: agents that died this tick are
// already flagged dead there, evaders captured this tick are not yet
// flagged. Rewards exist exactly for agents that were alive and uncaptured
// at tick start. `actors` scopes the step cost (all alive uncaptured agents
// when null; the acting subset in turn-taking play).
//
// Per rewarded agent: capture credit per evader captured / being_captured
// once; collide per report event participated in, capture events exempt;
// neighbor bonus or penalty (binary) when any opposing agent counts as
// adjacent after the move, where an opponent counts while alive and not
// captured before this tick; step cost when the agent acted.
std::map<int, double> compute_rewards(const CollisionReport& report,
                                      const std::vector<Capture>& captures,
                                      const WorldState& world_before,
                                      const WorldState& world_after,
                                      const RewardTable& table,
                                      const std::vector<int>* actors = nullptr);

}  // namespace gridpe

#endif  // GRIDPE_REWARD_H_
