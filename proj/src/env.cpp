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

#include "gridpe/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridpe {

const char* interaction_mode_name(InteractionMode m) {
  switch (m) {
    case InteractionMode::Auto:         return "auto";
    case InteractionMode::Simultaneous: return "simultaneous";
    case InteractionMode::TwoSwarm:     return "two_swarm";
    case InteractionMode::AgentByAgent: return "agent_by_agent";
  }
  return "auto";
}

InteractionMode interaction_mode_from_name(const std::string& name) {
  if (name == "auto") return InteractionMode::Auto;
  if (name == "simultaneous") return InteractionMode::Simultaneous;
  if (name == "two_swarm") return InteractionMode::TwoSwarm;
  if (name == "agent_by_agent") return InteractionMode::AgentByAgent;
  throw std::invalid_argument("unknown interaction mode: " + name);
}

InteractionMode EnvConfig::effective_mode() const {
  if (mode != InteractionMode::Auto) return mode;
  return task.two_swarm_turn_taking ? InteractionMode::TwoSwarm
                                    : InteractionMode::Simultaneous;
}

void EnvConfig::validate() const {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (pursuers < 1 || evaders < 1) {
    throw std::invalid_argument("need at least one pursuer and one evader");
  }
  for (const Position& p : obstacles) {
    if (p.row < 0 || p.row >= height || p.col < 0 || p.col >= width) {
      throw std::invalid_argument("obstacle out of bounds");
    }
  }
  const long free_cells =
      static_cast<long>(width) * height - static_cast<long>(obstacles.size());
  if (free_cells < pursuers + evaders) {
    throw std::invalid_argument("not enough free cells to place all agents");
  }
  if (fov < 0) throw std::invalid_argument("fov must be >= 0");
  if (horizon() < 1) throw std::invalid_argument("horizon must be positive");
  if (rewards.capture != -rewards.being_captured) {
    throw std::invalid_argument(
        "capture reward must be the exact negative of being captured");
  }
  switch (effective_mode()) {
    case InteractionMode::Simultaneous:
      if (task.two_swarm_turn_taking || task.agent_agent_turn_taking) {
        throw std::invalid_argument(
            "simultaneous mode requires a task without turn-taking flags");
      }
      break;
    case InteractionMode::TwoSwarm:
      if (!task.two_swarm_turn_taking) {
        throw std::invalid_argument("task does not turn-take by swarm");
      }
      break;
    case InteractionMode::AgentByAgent:
      if (!task.two_swarm_turn_taking || !task.agent_agent_turn_taking) {
        throw std::invalid_argument("task does not cycle agent by agent");
      }
      break;
    case InteractionMode::Auto:
      break;
  }
}

Env::Env(EnvConfig config) : config_(std::move(config)), task_(config_.task) {
  config_.validate();
  task_.max_steps = config_.horizon();
}

ResetOutcome Env::reset(std::uint64_t seed) {
  world_ = new_world(config_.width, config_.height, config_.obstacles,
                     config_.pursuers, config_.evaders, seed);
  status_ = GameStatus::Running;
  turn_ = config_.pursuers_move_first ? Role::Pursuer : Role::Evader;
  cycle_cursor_ = -1;
  episode_seed_ = seed;
  started_ = true;
  ResetOutcome out;
  out.observations = observe_actable();
  out.info = make_info(nullptr);
  return out;
}

std::vector<int> Env::team_actors(Role role) const {
  std::vector<int> ids;
  for (const AgentRecord& a : world_.agents) {
    if (a.alive && !a.captured && a.role == role) ids.push_back(a.id);
  }
  return ids;
}

std::map<int, Observation> Env::observe_actable() const {
  std::map<int, Observation> out;
  for (const AgentRecord& a : world_.agents) {
    if (a.alive && !a.captured) {
      out.emplace(a.id, observe(world_, a.id, config_.fov));
    }
  }
  return out;
}

Info Env::make_info(const CollisionReport* report) const {
  Info info;
  info.game_status = status_;
  if (report != nullptr) info.collision_counts = report->counts_by_type;
  info.alive.reserve(world_.agents.size());
  info.captured.reserve(world_.agents.size());
  for (const AgentRecord& a : world_.agents) {
    info.alive.push_back(a.alive);
    info.captured.push_back(a.captured);
  }
  return info;
}

std::vector<int> Env::next_actors() const {
  if (!started_ || status_ != GameStatus::Running) return {};
  switch (config_.effective_mode()) {
    case InteractionMode::TwoSwarm:
      return team_actors(turn_);
    case InteractionMode::AgentByAgent: {
      int best = -1;
      for (const AgentRecord& a : world_.agents) {
        if (!a.alive || a.captured) continue;
        if (a.id > cycle_cursor_ && (best == -1 || a.id < best)) best = a.id;
      }
      if (best == -1) {
        // Wrapped; the cursor resets when the round is committed.
        for (const AgentRecord& a : world_.agents) {
          if (a.alive && !a.captured) return {a.id};
        }
        return {};
      }
      return {best};
    }
    case InteractionMode::Auto:
    case InteractionMode::Simultaneous:
      break;
  }
  std::vector<int> ids;
  for (const AgentRecord& a : world_.agents) {
    if (a.alive && !a.captured) ids.push_back(a.id);
  }
  return ids;
}

StepOutcome Env::step_simultaneous(const std::map<int, Action>& joint) {
  if (!started_) throw std::logic_error("reset the environment before stepping");
  if (done()) throw std::logic_error("episode is finished; reset to continue");
  if (task_.two_swarm_turn_taking || task_.agent_agent_turn_taking) {
    throw std::invalid_argument("task turn-takes; use the turn-taking steps");
  }
  std::vector<int> actors;
  for (const AgentRecord& a : world_.agents) {
    if (a.alive && !a.captured) actors.push_back(a.id);
  }
  return step_internal(actors, joint, true);
}

StepOutcome Env::step_two_swarm(Role swarm, const std::map<int, Action>& joint) {
  if (!started_) throw std::logic_error("reset the environment before stepping");
  if (done()) throw std::logic_error("episode is finished; reset to continue");
  if (!task_.two_swarm_turn_taking) {
    throw std::invalid_argument("task does not turn-take by swarm");
  }
  if (swarm != turn_) {
    throw std::invalid_argument("out of turn: the other swarm moves now");
  }
  const Role first =
      config_.pursuers_move_first ? Role::Pursuer : Role::Evader;
  StepOutcome out = step_internal(team_actors(swarm), joint, swarm != first);
  turn_ = swarm == Role::Pursuer ? Role::Evader : Role::Pursuer;
  return out;
}

StepOutcome Env::step_agent_by_agent(int agent_id, Action action) {
  if (!started_) throw std::logic_error("reset the environment before stepping");
  if (done()) throw std::logic_error("episode is finished; reset to continue");
  if (!task_.two_swarm_turn_taking || !task_.agent_agent_turn_taking) {
    throw std::invalid_argument("task does not cycle agent by agent");
  }
  const std::vector<int> expected = next_actors();
  if (expected.empty() || expected[0] != agent_id) {
    throw std::invalid_argument("out of turn: another agent moves now");
  }
  StepOutcome out =
      step_internal({agent_id}, {{agent_id, action}}, false);
  if (status_ == GameStatus::Running) {
    bool wrapped = true;
    for (const AgentRecord& a : world_.agents) {
      if (a.alive && !a.captured && a.id > agent_id) {
        wrapped = false;
        break;
      }
    }
    if (wrapped) {
      world_.step_index += 1;
      cycle_cursor_ = -1;
      status_ = is_terminal(world_, task_);
      out.info.game_status = status_;
      out.truncated = status_ == GameStatus::Truncated;
    } else {
      cycle_cursor_ = agent_id;
    }
  }
  return out;
}

StepOutcome Env::step_internal(const std::vector<int>& actors,
                               const std::map<int, Action>& joint,
                               bool advance_round) {
  if (joint.size() != actors.size()) {
    throw std::invalid_argument("action map must cover exactly the acting agents");
  }
  JointAction actions(world_.agents.size());
  for (int id : actors) {
    auto it = joint.find(id);
    if (it == joint.end()) {
      throw std::invalid_argument("action map must cover exactly the acting agents");
    }
    actions[id] = it->second;
  }

  const WorldState before = world_;
  ResolveResult res =
      resolve_subset(world_, actions, task_.matrix, task_.capture_mode);

  // Captures. A pursuer-evader event that kills a live evader is a capture
  // in every mode; occupation adds post-move co-location, surrounding adds
  // the encirclement predicate (whose collision events stay penalized).
  std::map<int, Capture> caught;
  for (const Kill& kill : res.kills) {
    const AgentRecord& victim = before.agents[kill.agent_id];
    const CollisionEvent& ev = res.report.events[kill.event_index];
    if (victim.role != Role::Evader || victim.captured ||
        ev.type != CollisionType::PursuerEvader) {
      continue;
    }
    Capture& c = caught[victim.id];
    c.evader_id = victim.id;
    c.event_indices.push_back(kill.event_index);
    for (int p : ev.participants) {
      if (p != victim.id && before.agents[p].role == Role::Pursuer) {
        c.capturer_ids.push_back(p);
      }
    }
  }
  for (int e_id : check_captures(res.world, task_)) {
    Capture& c = caught[e_id];
    c.evader_id = e_id;
    const Position cell = res.world.agents[e_id].position;
    if (task_.capture_mode == CaptureMode::Occupation) {
      for (const AgentRecord& p : res.world.agents) {
        if (p.role == Role::Pursuer && p.alive && p.position == cell) {
          c.capturer_ids.push_back(p.id);
        }
      }
      for (std::size_t i = 0; i < res.report.events.size(); ++i) {
        const CollisionEvent& ev = res.report.events[i];
        if (ev.type != CollisionType::PursuerEvader) continue;
        if (ev.contested_cell != cell) continue;
        bool has_evader = false;
        bool has_capturer = false;
        for (int id : ev.participants) {
          if (id == e_id) has_evader = true;
          if (std::find(c.capturer_ids.begin(), c.capturer_ids.end(), id) !=
              c.capturer_ids.end()) {
            has_capturer = true;
          }
        }
        if (has_evader && has_capturer) {
          c.event_indices.push_back(static_cast<int>(i));
        }
      }
    } else {
      for (const Position& q : von_neumann_neighbors(cell, res.world)) {
        for (const AgentRecord& p : res.world.agents) {
          if (p.role == Role::Pursuer && p.alive && p.position == q) {
            c.capturer_ids.push_back(p.id);
          }
        }
      }
    }
  }
  std::vector<Capture> captures;
  captures.reserve(caught.size());
  for (auto& [id, c] : caught) {
    std::sort(c.capturer_ids.begin(), c.capturer_ids.end());
    c.capturer_ids.erase(
        std::unique(c.capturer_ids.begin(), c.capturer_ids.end()),
        c.capturer_ids.end());
    std::sort(c.event_indices.begin(), c.event_indices.end());
    c.event_indices.erase(
        std::unique(c.event_indices.begin(), c.event_indices.end()),
        c.event_indices.end());
    captures.push_back(std::move(c));
  }

  StepOutcome out;
  out.rewards = compute_rewards(res.report, captures, before, res.world,
                                config_.rewards, &actors);

  for (const Capture& c : captures) {
    AgentRecord& e = res.world.agents[c.evader_id];
    e.captured = true;
    if (task_.capture_removes_evader) e.alive = false;
  }
  world_ = std::move(res.world);
  if (advance_round) world_.step_index += 1;
  status_ = is_terminal(world_, task_);

  out.observations = observe_actable();
  out.terminated = status_ == GameStatus::AllCaptured ||
                   status_ == GameStatus::PursuersExtinct;
  out.truncated = status_ == GameStatus::Truncated;
  out.info = make_info(&res.report);
  out.report = std::move(res.report);
  out.captures = std::move(captures);
  return out;
}

}  // namespace gridpe
