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

#include "gridpe/collision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace gridpe {

char outcome_char(Outcome o) {
  switch (o) {
    case Outcome::D: return 'D';
    case Outcome::R: return 'R';
    case Outcome::B: return 'B';
  }
  return 'B';
}

Outcome outcome_from_char(char c) {
  switch (c) {
    case 'D': return Outcome::D;
    case 'R': return Outcome::R;
    case 'B': return Outcome::B;
    default:
      throw std::invalid_argument(std::string("unknown outcome code: ") + c);
  }
}

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::Vertex:   return "vertex";
    case EventKind::Swap:     return "swap";
    case EventKind::Obstacle: return "obstacle";
    case EventKind::Boundary: return "boundary";
  }
  return "vertex";
}

const char* collision_type_name(CollisionType t) {
  switch (t) {
    case CollisionType::AgentObstacle:         return "agent_obstacle";
    case CollisionType::AgentAgentCooperative: return "agent_agent";
    case CollisionType::PursuerEvader:         return "pursuer_evader";
  }
  return "agent_obstacle";
}

namespace {

// What happens to `mine` when it contacts `other`.
Outcome entry_outcome(const OutcomeMatrix& m, Role mine, Role other) {
  if (mine == other) return m.agent_agent;
  return mine == Role::Pursuer ? m.pursuer_vs_evader : m.evader_vs_pursuer;
}

CollisionType pair_type(Role a, Role b) {
  return a == b ? CollisionType::AgentAgentCooperative
                : CollisionType::PursuerEvader;
}

void check_arity(const WorldState& world, const JointAction& joint) {
  if (joint.size() != world.agents.size()) {
    throw std::invalid_argument("joint action size must equal agent count");
  }
  for (const AgentRecord& a : world.agents) {
    const bool should_act = a.alive && !a.captured;
    if (should_act != joint[a.id].has_value()) {
      throw std::invalid_argument(
          "joint action must cover exactly the alive uncaptured agents");
    }
  }
}

// Move: still headed for its target. Hold: at its origin (stay intent,
// bounced, or a blocker without a turn). Doom: dies this tick; its corpse
// keeps blocking its origin cell until the tick ends.
enum class Fate : int { Move = 0, Hold = 1, Doom = 2 };

class Resolver {
 public:
  Resolver(const WorldState& world, const JointAction& joint,
           const OutcomeMatrix& matrix, CaptureMode mode)
      : world_(world), joint_(joint), matrix_(matrix), mode_(mode) {
    const int n = static_cast<int>(world.agents.size());
    for (int id = 0; id < n; ++id) {
      if (world.agents[id].id != id) {
        throw std::invalid_argument("agent ids must be dense and ordered");
      }
    }
    fate_.assign(n, Fate::Hold);
    target_.resize(n);
    doom_wave_.assign(n, -1);
    for (int id = 0; id < n; ++id) {
      const AgentRecord& a = world.agents[id];
      target_[id] = a.position;
      if (!a.alive || !joint[id].has_value()) continue;
      target_[id] = intended_position(a.position, *joint[id]);
      if (target_[id] != a.position) fate_[id] = Fate::Move;
    }
  }

  ResolveResult run() {
    static_hits();
    vertex_contests();
    swap_contests();
    arrival_waves();
    return finalize();
  }

  // The pre-resolution view: intent conflicts only, outcomes as prescribed.
  CollisionReport classify_only() {
    classify_mode_ = true;
    static_hits();
    vertex_contests();
    swap_contests();
    occupied_target_intents();
    return std::move(report_);
  }

 private:
  bool mover(int id) const { return fate_[id] == Fate::Move; }
  Role role(int id) const { return world_.agents[id].role; }

  int add_event(CollisionType type, EventKind kind, Position cell,
                std::vector<int> participants, std::vector<Outcome> applied) {
    CollisionEvent ev;
    ev.type = type;
    ev.kind = kind;
    ev.contested_cell = cell;
    ev.participants = std::move(participants);
    ev.applied = std::move(applied);
    report_.events.push_back(std::move(ev));
    report_.counts_by_type[static_cast<int>(type)] += 1;
    return static_cast<int>(report_.events.size()) - 1;
  }

  void doom(int id, int event_index) {
    if (fate_[id] != Fate::Doom) {
      fate_[id] = Fate::Doom;
      doom_wave_[id] = wave_;
      kills_.push_back({event_index, id});
      changed_ = true;
    } else if (doom_wave_[id] == wave_) {
      // Several events struck the agent in one wave; all of them count as
      // causes of death so capture credit can reach every killer.
      kills_.push_back({event_index, id});
    }
  }

  void bounce(int id) {
    if (fate_[id] == Fate::Move) {
      fate_[id] = Fate::Hold;
      changed_ = true;
    }
  }

  // Boundary and obstacle hits depend on the agent's intent alone. R cannot
  // put an agent off-grid, so boundary R degrades to a bounce; obstacle R
  // lets the agent stand on the obstacle (research matrices only, no
  // registry variant allows it).
  void static_hits() {
    for (int id = 0; id < static_cast<int>(world_.agents.size()); ++id) {
      if (!mover(id)) continue;
      const Position t = target_[id];
      if (world_.in_bounds(t) && !world_.is_obstacle(t)) continue;
      const bool boundary = !world_.in_bounds(t);
      Outcome applied = matrix_.agent_obstacle;
      if (applied == Outcome::R && boundary) applied = Outcome::B;
      const int ev =
          add_event(CollisionType::AgentObstacle,
                    boundary ? EventKind::Boundary : EventKind::Obstacle, t,
                    {id}, {applied});
      if (classify_mode_) continue;
      if (applied == Outcome::D) {
        doom(id, ev);
      } else if (applied == Outcome::B) {
        bounce(id);
      }
    }
  }

  // Vertex contest: two or more surviving movers share one target cell.
  // Events are recorded pairwise and judged by each side's own entry; the
  // view is intent-level, so a participant bounced here still stamps its
  // partner, and ids, not arrival order, fix the event sequence.
  void vertex_contests() {
    std::map<Position, std::vector<int>> groups;
    for (int id = 0; id < static_cast<int>(world_.agents.size()); ++id) {
      if (classify_mode_ ? intends_enterable_move(id) : mover(id)) {
        groups[target_[id]].push_back(id);
      }
    }
    for (const auto& [cell, ids] : groups) {
      if (ids.size() < 2) continue;
      for (std::size_t x = 0; x + 1 < ids.size(); ++x) {
        for (std::size_t y = x + 1; y < ids.size(); ++y) {
          contest_pair(ids[x], ids[y], EventKind::Vertex, cell);
        }
      }
    }
  }

  // Swap contest: two movers exchanging cells, treated as a collision of
  // the same pairwise shape. Under R the mover passes through; asymmetric
  // pairs then fall through to the arrival wave against the bounced
  // partner, which refreshes this event instead of recording a second one.
  void swap_contests() {
    const int n = static_cast<int>(world_.agents.size());
    for (int i = 0; i < n; ++i) {
      if (!intends_move(i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!intends_move(j)) continue;
        if (target_[i] != world_.agents[j].position ||
            target_[j] != world_.agents[i].position) {
          continue;
        }
        contest_pair(i, j, EventKind::Swap, target_[i]);
      }
    }
  }

  void contest_pair(int i, int j, EventKind kind, Position cell) {
    const Outcome ei = entry_outcome(matrix_, role(i), role(j));
    const Outcome ej = entry_outcome(matrix_, role(j), role(i));
    const int ev = add_event(pair_type(role(i), role(j)), kind, cell, {i, j},
                             {ei, ej});
    pair_event_[ordered(i, j)] = ev;
    if (classify_mode_) return;
    if (ei == Outcome::D) doom(i, ev); else if (ei == Outcome::B) bounce(i);
    if (ej == Outcome::D) doom(j, ev); else if (ej == Outcome::B) bounce(j);
  }

  // An agent that acted and aimed off its own cell, however the intent has
  // fared since. Swap detection and classify's views are intent-level.
  bool intends_move(int id) const {
    const AgentRecord& a = world_.agents[id];
    return a.alive && joint_[id].has_value() && target_[id] != a.position;
  }

  bool intends_enterable_move(int id) const {
    return intends_move(id) && world_.in_bounds(target_[id]) &&
           !world_.is_obstacle(target_[id]);
  }

  // classify()'s clause for moves onto standing occupants: the occupant is
  // alive and either has no turn (frozen or off turn) or intends Stay.
  void occupied_target_intents() {
    const int n = static_cast<int>(world_.agents.size());
    for (int i = 0; i < n; ++i) {
      if (!intends_enterable_move(i)) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const AgentRecord& b = world_.agents[j];
        if (!b.alive || b.position != target_[i]) continue;
        if (joint_[j].has_value() && target_[j] != b.position) continue;
        add_event(pair_type(role(i), role(j)), EventKind::Vertex, target_[i],
                  {i, j},
                  {entry_outcome(matrix_, role(i), role(j)),
                   entry_outcome(matrix_, role(j), role(i))});
      }
    }
  }

  // Synchronous waves: every still-moving agent is checked against the
  // occupants already settled on its target cell; all decisions in a wave
  // read the wave-start snapshot, so agent order cannot matter. Every
  // productive wave downgrades at least one fate (Move->Hold/Doom or
  // Hold->Doom) and fates only ever downgrade, so the fixed point arrives
  // within 2n+1 waves.
  void arrival_waves() {
    const int n = static_cast<int>(world_.agents.size());
    for (wave_ = 1; wave_ <= 2 * n + 2; ++wave_) {
      changed_ = false;
      const std::vector<Fate> snapshot = fate_;
      std::map<Position, std::vector<int>> settled;
      for (int id = 0; id < n; ++id) {
        const AgentRecord& a = world_.agents[id];
        if (!a.alive) continue;
        if (snapshot[id] != Fate::Move) settled[a.position].push_back(id);
      }
      for (int i = 0; i < n; ++i) {
        if (snapshot[i] != Fate::Move) continue;
        auto it = settled.find(target_[i]);
        if (it != settled.end()) meet_settled(i, it->second, snapshot);
      }
      if (!changed_) return;
    }
    throw std::logic_error("collision resolution failed to reach a fixed point");
  }

  // Mover i has arrived at a cell with settled occupants. Judge all
  // contacts first, then record them, so the mover's recorded disposition
  // reflects the union of its contacts rather than the scan order.
  void meet_settled(int i, const std::vector<int>& occupants,
                    const std::vector<Fate>& snapshot) {
    bool dies = false;
    bool blocked = false;
    for (int j : occupants) {
      const Outcome ei = entry_outcome(matrix_, role(i), role(j));
      if (snapshot[j] == Fate::Doom) {
        // Corpse on the cell: R passes over it silently, B and D are real
        // contacts with the wreck.
        if (ei == Outcome::B) blocked = true;
        if (ei == Outcome::D) dies = true;
        continue;
      }
      const Outcome ej = entry_outcome(matrix_, role(j), role(i));
      if (ei == Outcome::D) {
        dies = true;
      } else if (ei == Outcome::B) {
        blocked = true;
      } else {
        // R enters only when the contact kills the occupant or both sides
        // tolerate co-occupancy; surrounding capture modes never let
        // opponents share a cell.
        const bool adversarial = role(i) != role(j);
        const bool surrounding = mode_ != CaptureMode::Occupation;
        const bool enters =
            ej == Outcome::D || (ej == Outcome::R && !(surrounding && adversarial));
        if (!enters) blocked = true;
      }
    }
    const bool enters_cell = !dies && !blocked;

    for (int j : occupants) {
      const Outcome ei = entry_outcome(matrix_, role(i), role(j));
      const bool corpse = snapshot[j] == Fate::Doom;
      if (corpse && ei == Outcome::R) continue;
      const Outcome i_applied =
          ei == Outcome::D ? Outcome::D : (enters_cell ? Outcome::R : Outcome::B);
      const Outcome j_applied =
          corpse ? Outcome::D : entry_outcome(matrix_, role(j), role(i));
      const auto key = ordered(i, j);
      auto seen = pair_event_.find(key);
      int ev;
      if (seen == pair_event_.end()) {
        ev = add_event(pair_type(role(i), role(j)), EventKind::Vertex,
                       target_[i], {i, j}, {i_applied, j_applied});
        pair_event_[key] = ev;
      } else {
        // The pair already collided this tick (a swap whose R side passed
        // through onto the bounced partner). One physical contact, one
        // event: refresh the mover's disposition instead of double-counting.
        ev = seen->second;
        CollisionEvent& e = report_.events[ev];
        for (std::size_t s = 0; s < e.participants.size(); ++s) {
          if (e.participants[s] == i) e.applied[s] = i_applied;
        }
      }
      if (ei == Outcome::D) doom(i, ev);
      if (!corpse && j_applied == Outcome::D) doom(j, ev);
    }
    if (!dies && blocked) bounce(i);
  }

  ResolveResult finalize() {
    ResolveResult result;
    result.world = world_;
    for (int id = 0; id < static_cast<int>(world_.agents.size()); ++id) {
      AgentRecord& a = result.world.agents[id];
      switch (fate_[id]) {
        case Fate::Move:
          a.position = target_[id];
          break;
        case Fate::Hold:
          break;
        case Fate::Doom:
          // The record keeps the origin cell the corpse blocked all tick; a
          // dead agent no longer occupies anything.
          a.alive = false;
          break;
      }
    }
    result.report = std::move(report_);
    result.kills = std::move(kills_);
    return result;
  }

  static std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  const WorldState& world_;
  const JointAction& joint_;
  const OutcomeMatrix& matrix_;
  CaptureMode mode_;

  std::vector<Fate> fate_;
  std::vector<Position> target_;
  std::vector<int> doom_wave_;
  int wave_ = 0;
  bool changed_ = false;
  bool classify_mode_ = false;

  CollisionReport report_;
  std::vector<Kill> kills_;
  std::map<std::pair<int, int>, int> pair_event_;
};

}  // namespace

CollisionReport classify(const WorldState& world, const JointAction& joint,
                         const OutcomeMatrix& matrix) {
  check_arity(world, joint);
  Resolver r(world, joint, matrix, CaptureMode::Occupation);
  return r.classify_only();
}

ResolveResult resolve(const WorldState& world, const JointAction& joint,
                      const OutcomeMatrix& matrix, CaptureMode mode) {
  check_arity(world, joint);
  Resolver r(world, joint, matrix, mode);
  return r.run();
}

ResolveResult resolve_subset(const WorldState& world, const JointAction& joint,
                             const OutcomeMatrix& matrix, CaptureMode mode) {
  if (joint.size() != world.agents.size()) {
    throw std::invalid_argument("joint action size must equal agent count");
  }
  Resolver r(world, joint, matrix, mode);
  return r.run();
}

}  // namespace gridpe
