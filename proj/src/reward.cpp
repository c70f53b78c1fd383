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

#include <cstdlib>
#include <set>

namespace gridpe {

std::map<int, double> compute_rewards(const CollisionReport& report,
                                      const std::vector<Capture>& captures,
                                      const WorldState& world_before,
                                      const WorldState& world_after,
                                      const RewardTable& table,
                                      const std::vector<int>* actors) {
  std::map<int, double> rewards;
  for (const AgentRecord& a : world_before.agents) {
    if (a.alive && !a.captured) rewards[a.id] = 0.0;
  }

  for (const Capture& c : captures) {
    for (int p : c.capturer_ids) {
      if (auto it = rewards.find(p); it != rewards.end()) {
        it->second += table.capture;
      }
    }
    if (auto it = rewards.find(c.evader_id); it != rewards.end()) {
      it->second += table.being_captured;
    }
  }

  std::set<int> capture_events;
  for (const Capture& c : captures) {
    capture_events.insert(c.event_indices.begin(), c.event_indices.end());
  }
  for (std::size_t e = 0; e < report.events.size(); ++e) {
    if (capture_events.count(static_cast<int>(e))) continue;
    for (int id : report.events[e].participants) {
      if (auto it = rewards.find(id); it != rewards.end()) {
        it->second += table.collide;
      }
    }
  }

  // Adjacency is judged on post-move cells. An opponent counts while it is
  // alive after the move and was not already captured entering the tick, so
  // a freshly surrounded evader still pays and rewards adjacency once, but
  // a frozen body cannot be farmed on later ticks.
  for (auto& [id, r] : rewards) {
    const AgentRecord& self = world_after.agents[id];
    if (!self.alive) continue;
    bool opposed = false;
    for (const AgentRecord& b : world_after.agents) {
      if (!b.alive || b.captured || b.role == self.role) continue;
      if (std::abs(b.position.row - self.position.row) +
              std::abs(b.position.col - self.position.col) ==
          1) {
        opposed = true;
        break;
      }
    }
    if (opposed) {
      r += self.role == Role::Pursuer ? table.neighbor : table.being_neighbored;
    }
  }

  if (actors == nullptr) {
    for (auto& [id, r] : rewards) r += table.step_cost;
  } else {
    for (int id : *actors) {
      if (auto it = rewards.find(id); it != rewards.end()) {
        it->second += table.step_cost;
      }
    }
  }
  return rewards;
}

}  // namespace gridpe
