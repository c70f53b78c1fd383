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

namespace gridpe {

Observation observe(const WorldState& world, int agent_id, int fov) {
  if (agent_id < 0 || agent_id >= static_cast<int>(world.agents.size())) {
    throw std::invalid_argument("observe: no such agent");
  }
  const AgentRecord& self = world.agents[agent_id];
  if (!self.alive) {
    throw std::invalid_argument("observe: agent is not alive");
  }
  if (fov < 0) throw std::invalid_argument("observe: fov must be >= 0");

  const int side = 2 * fov + 1;
  const int cells = side * side;
  Observation obs;
  obs.fov = fov;
  obs.data.assign(observation_length(fov), 0.0f);

  for (int wr = 0; wr < side; ++wr) {
    for (int wc = 0; wc < side; ++wc) {
      const Position p{self.position.row + wr - fov,
                       self.position.col + wc - fov};
      if (!world.in_bounds(p) || world.is_obstacle(p)) {
        obs.data[wr * side + wc] = 1.0f;
      }
    }
  }
  for (const AgentRecord& a : world.agents) {
    if (!a.alive || a.id == agent_id) continue;
    const int wr = a.position.row - self.position.row + fov;
    const int wc = a.position.col - self.position.col + fov;
    if (wr < 0 || wr >= side || wc < 0 || wc >= side) continue;
    const int channel = a.role == self.role ? 1 : 2;
    obs.data[channel * cells + wr * side + wc] = 1.0f;
  }

  // Degenerate 1-wide grids normalize to 0 rather than divide by zero.
  obs.data[3 * cells] =
      world.height > 1
          ? static_cast<float>(self.position.row) / (world.height - 1)
          : 0.0f;
  obs.data[3 * cells + 1] =
      world.width > 1 ? static_cast<float>(self.position.col) / (world.width - 1)
                      : 0.0f;
  return obs;
}

}  // namespace gridpe
