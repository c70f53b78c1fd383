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

#ifndef GRIDPE_WORLD_H_
#define GRIDPE_WORLD_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace gridpe {

// Row/col may go negative for intended moves off the grid; callers classify
// out-of-bounds results, the type itself does not.
struct Position {
  int row = 0;
  int col = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

enum class Action : int { Stay = 0, Up = 1, Down = 2, Left = 3, Right = 4 };

inline constexpr int kActionCount = 5;

// The fixed order used for tie-breaking in scripted policies.
inline constexpr Action kGreedyTieOrder[5] = {
    Action::Up, Action::Down, Action::Left, Action::Right, Action::Stay};

const char* action_name(Action a);
Action action_from_name(const std::string& name);

// Pure translation by the action's unit vector; Stay is the identity.
inline Position intended_position(Position p, Action a) {
  switch (a) {
    case Action::Up:    return {p.row - 1, p.col};
    case Action::Down:  return {p.row + 1, p.col};
    case Action::Left:  return {p.row, p.col - 1};
    case Action::Right: return {p.row, p.col + 1};
    case Action::Stay:  return p;
  }
  return p;
}

enum class Role : int { Pursuer = 0, Evader = 1 };

const char* role_name(Role r);
Role role_from_name(const std::string& name);

// captured implies role == Evader. A non-alive agent occupies no cell: its
// stored position is its last location and is excluded from every occupancy
// query. captured && alive means frozen in place (a physical blocker).
struct AgentRecord {
  int id = 0;
  Role role = Role::Pursuer;
  Position position;
  bool alive = true;
  bool captured = false;
};

struct WorldState {
  int width = 0;
  int height = 0;
  std::set<Position> obstacles;
  std::vector<AgentRecord> agents;  // indexed by id
  int step_index = 0;

  bool in_bounds(Position p) const {
    return p.row >= 0 && p.row < height && p.col >= 0 && p.col < width;
  }
  bool is_obstacle(Position p) const { return obstacles.count(p) > 0; }

  // Alive agents standing on p.
  std::vector<int> occupants(Position p) const;

  int alive_count(Role role) const;
  // Evaders that are alive and not captured: the set pursuit still targets.
  int free_evader_count() const;
};

// Agents are placed by a seeded shuffle of the free-cell list (row-major
// order before shuffling), pursuers drawing ids 0..P-1, evaders P..P+E-1.
// Throws std::invalid_argument when the free cells cannot hold everyone.
WorldState new_world(int width, int height, const std::set<Position>& obstacles,
                     int pursuer_count, int evader_count, std::uint64_t seed);

// In-bounds 4-neighborhood: 2 at corners, 3 on edges, 4 in the interior,
// always excluding p itself. Order is Up, Down, Left, Right.
std::vector<Position> von_neumann_neighbors(Position p, const WorldState& world);

}  // namespace gridpe

#endif  // GRIDPE_WORLD_H_
