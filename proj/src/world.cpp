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

#include "gridpe/world.hpp"

#include <stdexcept>

#include "gridpe/rng.hpp"

namespace gridpe {

const char* action_name(Action a) {
  switch (a) {
    case Action::Stay:  return "Stay";
    case Action::Up:    return "Up";
    case Action::Down:  return "Down";
    case Action::Left:  return "Left";
    case Action::Right: return "Right";
  }
  return "Stay";
}

Action action_from_name(const std::string& name) {
  if (name == "Stay") return Action::Stay;
  if (name == "Up") return Action::Up;
  if (name == "Down") return Action::Down;
  if (name == "Left") return Action::Left;
  if (name == "Right") return Action::Right;
  throw std::invalid_argument("unknown action name: " + name);
}

const char* role_name(Role r) {
  return r == Role::Pursuer ? "pursuer" : "evader";
}

Role role_from_name(const std::string& name) {
  if (name == "pursuer") return Role::Pursuer;
  if (name == "evader") return Role::Evader;
  throw std::invalid_argument("unknown role name: " + name);
}

std::vector<int> WorldState::occupants(Position p) const {
  std::vector<int> ids;
  for (const AgentRecord& a : agents) {
    if (a.alive && a.position == p) ids.push_back(a.id);
  }
  return ids;
}

int WorldState::alive_count(Role role) const {
  int n = 0;
  for (const AgentRecord& a : agents) {
    if (a.alive && a.role == role) ++n;
  }
  return n;
}

int WorldState::free_evader_count() const {
  int n = 0;
  for (const AgentRecord& a : agents) {
    if (a.alive && !a.captured && a.role == Role::Evader) ++n;
  }
  return n;
}

WorldState new_world(int width, int height, const std::set<Position>& obstacles,
                     int pursuer_count, int evader_count, std::uint64_t seed) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (pursuer_count < 0 || evader_count < 0) {
    throw std::invalid_argument("agent counts must be non-negative");
  }
  std::vector<Position> free_cells;
  free_cells.reserve(static_cast<std::size_t>(width) * height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      Position p{r, c};
      if (!obstacles.count(p)) free_cells.push_back(p);
    }
  }
  const int need = pursuer_count + evader_count;
  if (static_cast<int>(free_cells.size()) < need) {
    throw std::invalid_argument("not enough free cells to place all agents");
  }

  // Fisher-Yates over the row-major free-cell list; only the first `need`
  // draws matter but the full pass keeps the loop branch-free.
  Rng rng(derive_seed(seed, 0x77a9cedULL));
  for (std::size_t i = free_cells.size(); i > 1; --i) {
    std::size_t j = rng.next_below(i);
    std::swap(free_cells[i - 1], free_cells[j]);
  }

  WorldState world;
  world.width = width;
  world.height = height;
  world.obstacles = obstacles;
  world.agents.reserve(need);
  for (int i = 0; i < need; ++i) {
    AgentRecord a;
    a.id = i;
    a.role = i < pursuer_count ? Role::Pursuer : Role::Evader;
    a.position = free_cells[i];
    world.agents.push_back(a);
  }
  return world;
}

std::vector<Position> von_neumann_neighbors(Position p, const WorldState& world) {
  std::vector<Position> out;
  out.reserve(4);
  const Position candidates[4] = {{p.row - 1, p.col},
                                  {p.row + 1, p.col},
                                  {p.row, p.col - 1},
                                  {p.row, p.col + 1}};
  for (const Position& q : candidates) {
    if (world.in_bounds(q)) out.push_back(q);
  }
  return out;
}

}  // namespace gridpe
