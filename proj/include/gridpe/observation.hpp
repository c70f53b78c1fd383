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

#ifndef GRIDPE_OBSERVATION_H_
#define GRIDPE_OBSERVATION_H_

#include <vector>

#include "gridpe/world.hpp"

namespace gridpe {

// Egocentric window of side 2r+1, three binary channels in channel-major
// order (blockers incl. out-of-bounds padding; alive teammates excluding
// self; alive opponents), then the agent's own row and col normalized to
// [0,1]. Frozen captured evaders stay visible in their role channel.
struct Observation {
  std::vector<float> data;
  int fov = 5;
};

constexpr int observation_length(int fov) {
  return 3 * (2 * fov + 1) * (2 * fov + 1) + 2;
}

// Throws std::invalid_argument for a dead agent.
Observation observe(const WorldState& world, int agent_id, int fov);

}  // namespace gridpe

#endif  // GRIDPE_OBSERVATION_H_
