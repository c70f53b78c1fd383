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

#include "gridpe/render.hpp"

namespace gridpe {

std::string render_ascii(const WorldState& world) {
  std::string frame;
  frame.reserve(static_cast<std::size_t>(world.height) * (world.width + 1));
  for (int r = 0; r < world.height; ++r) {
    if (r > 0) frame.push_back('\n');
    for (int c = 0; c < world.width; ++c) {
      const Position p{r, c};
      if (world.is_obstacle(p)) {
        frame.push_back('#');
        continue;
      }
      int count = 0;
      const AgentRecord* only = nullptr;
      for (const AgentRecord& a : world.agents) {
        if (a.alive && a.position == p) {
          ++count;
          only = &a;
        }
      }
      if (count == 0) {
        frame.push_back('.');
      } else if (count > 1) {
        frame.push_back(count > 9 ? '9' : static_cast<char>('0' + count));
      } else if (only->captured) {
        frame.push_back('*');
      } else {
        frame.push_back(only->role == Role::Pursuer ? 'P' : 'E');
      }
    }
  }
  return frame;
}

}  // namespace gridpe
