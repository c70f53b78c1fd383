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

#ifndef GRIDPE_COLLISION_H_
#define GRIDPE_COLLISION_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gridpe/world.hpp"

namespace gridpe {

// D: reach the contested cell and disappear. R: reach and stay alive
// (co-occupancy tolerated). B: bounce back to the origin cell, alive.
enum class Outcome : int { D = 0, R = 1, B = 2 };

char outcome_char(Outcome o);
Outcome outcome_from_char(char c);

enum class CollisionType : int {
  AgentObstacle = 0,
  AgentAgentCooperative = 1,
  PursuerEvader = 2,
};

// Per-side entries. pursuer_vs_evader is what happens to the pursuer in an
// adversarial contact, evader_vs_pursuer what happens to the evader.
struct OutcomeMatrix {
  Outcome agent_obstacle = Outcome::B;
  Outcome agent_agent = Outcome::B;
  Outcome pursuer_vs_evader = Outcome::R;
  Outcome evader_vs_pursuer = Outcome::B;
};

// How captures are detected downstream. resolve() needs it for one rule:
// in surrounding-based play, pursuers and evaders never co-occupy a cell,
// so a mover bounces off an opposing occupant even when its entry is R.
enum class CaptureMode : int {
  Occupation = 0,
  Surrounding = 1,
  SurroundingDisappear = 2,
};

enum class EventKind : int { Vertex = 0, Swap = 1, Obstacle = 2, Boundary = 3 };

const char* event_kind_name(EventKind k);
const char* collision_type_name(CollisionType t);

// One contact. Obstacle/boundary events carry one participant, vertex and
// swap events exactly two; k-way cell contests are reported pairwise.
// `applied` is parallel to `participants` and holds each side's disposition:
// in a resolved report an R that was denied by an occupied cell reads B, and
// participants removed by this tick read D.
struct CollisionEvent {
  CollisionType type = CollisionType::AgentObstacle;
  EventKind kind = EventKind::Vertex;
  Position contested_cell;
  std::vector<int> participants;
  std::vector<Outcome> applied;
};

struct CollisionReport {
  std::vector<CollisionEvent> events;
  std::array<int, 3> counts_by_type{};

  int count(CollisionType t) const {
    return counts_by_type[static_cast<int>(t)];
  }
  int total() const {
    return counts_by_type[0] + counts_by_type[1] + counts_by_type[2];
  }
};

// Actions indexed by agent id; disengaged entries mean the agent is not
// acting this tick (dead, captured, or off turn). Off-turn alive agents are
// stationary blockers.
using JointAction = std::vector<std::optional<Action>>;

// Links a death to the event that caused it. When several same-tick events
// strike the dying agent simultaneously, each produces a Kill entry; capture
// crediting downstream pays every pursuer participant of those events.
struct Kill {
  int event_index = 0;
  int agent_id = 0;
};

struct ResolveResult {
  WorldState world;
  CollisionReport report;
  std::vector<Kill> kills;
};

// Pre-resolution view: boundary/obstacle hits, vertex contests (two movers
// sharing a target, or a mover targeting a non-vacating occupant's cell),
// and swaps, with matrix-prescribed outcomes. Cascaded consequences (an
// agent bounced into someone's path) appear only in resolve()'s report.
// Throws std::invalid_argument unless exactly the alive uncaptured agents
// have actions.
CollisionReport classify(const WorldState& world, const JointAction& joint,
                         const OutcomeMatrix& matrix);

// Simultaneous-move resolution. Intent conflicts (vertex, swap, static hits)
// are judged first, then arrival conflicts propagate in synchronous waves:
// a mover whose target holds a settled occupant bounces unless both sides'
// entries are R (and, under surrounding capture modes, the sides are not
// opponents); occupants with entry D die in place; agents dying this tick
// block their origin cell until the tick ends. Deterministic and
// order-independent; same arity contract as classify.
ResolveResult resolve(const WorldState& world, const JointAction& joint,
                      const OutcomeMatrix& matrix, CaptureMode mode);

// Arity-unchecked variant used by the turn-taking paths, where only a
// subset of alive agents acts.
ResolveResult resolve_subset(const WorldState& world, const JointAction& joint,
                             const OutcomeMatrix& matrix, CaptureMode mode);

}  // namespace gridpe

#endif  // GRIDPE_COLLISION_H_
