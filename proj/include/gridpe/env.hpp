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

#ifndef GRIDPE_ENV_H_
#define GRIDPE_ENV_H_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gridpe/observation.hpp"
#include "gridpe/reward.hpp"
#include "gridpe/task.hpp"
#include "gridpe/world.hpp"

namespace gridpe {

// How episodes are driven. Auto picks the task's native model: two-swarm
// when the task turn-takes, simultaneous otherwise.
enum class InteractionMode : int {
  Auto = 0,
  Simultaneous = 1,
  TwoSwarm = 2,
  AgentByAgent = 3,
};

const char* interaction_mode_name(InteractionMode m);
InteractionMode interaction_mode_from_name(const std::string& name);

struct EnvConfig {
  TaskSpec task;
  int width = 40;
  int height = 40;
  std::set<Position> obstacles;
  int pursuers = 8;
  int evaders = 30;
  int fov = 5;
  RewardTable rewards;
  std::uint64_t seed = 0;
  // Overrides the task's horizon when positive.
  int max_steps = 0;
  InteractionMode mode = InteractionMode::Auto;
  bool pursuers_move_first = true;

  int horizon() const { return max_steps > 0 ? max_steps : task.max_steps; }
  InteractionMode effective_mode() const;
  // Throws std::invalid_argument on inconsistent settings (capacity,
  // counts, reward-table sign contract).
  void validate() const;
};

struct Info {
  GameStatus game_status = GameStatus::Running;
  std::array<int, 3> collision_counts{};  // this step, by CollisionType
  std::vector<bool> alive;                // by agent id
  std::vector<bool> captured;
};

struct StepOutcome {
  // Fresh observations for every agent that may still act.
  std::map<int, Observation> observations;
  // Rewards for every agent that was alive and uncaptured at step start.
  std::map<int, double> rewards;
  bool terminated = false;
  bool truncated = false;
  Info info;
  CollisionReport report;
  std::vector<Capture> captures;
};

struct ResetOutcome {
  std::map<int, Observation> observations;
  Info info;
};

// Single-threaded episode state machine. Parallelism happens across
// instances, never within one.
class Env {
 public:
  explicit Env(EnvConfig config);

  ResetOutcome reset(std::uint64_t seed);
  ResetOutcome reset() { return reset(config_.seed); }

  // All agents act at once. Requires a task without turn-taking flags and
  // one action per alive uncaptured agent.
  StepOutcome step_simultaneous(const std::map<int, Action>& joint);

  // One swarm acts; the other stands as blockers. Swarms must alternate,
  // the configured first mover leading each round. Rewards and captures are
  // evaluated after every half-step; the step counter advances when the
  // round's second swarm finishes.
  StepOutcome step_two_swarm(Role swarm, const std::map<int, Action>& joint);

  // One agent acts against a static world. The cycle runs all pursuers in
  // id order, then all evaders, skipping dead or captured agents; the step
  // counter advances when the cycle wraps.
  StepOutcome step_agent_by_agent(int agent_id, Action action);

  // Ids expected to act on the next step call under the effective mode.
  std::vector<int> next_actors() const;
  Role next_swarm() const { return turn_; }

  const WorldState& world() const { return world_; }
  const EnvConfig& config() const { return config_; }
  GameStatus status() const { return status_; }
  bool done() const { return status_ != GameStatus::Running; }
  std::uint64_t episode_seed() const { return episode_seed_; }

 private:
  StepOutcome step_internal(const std::vector<int>& actors,
                            const std::map<int, Action>& joint,
                            bool advance_round);
  std::vector<int> team_actors(Role role) const;
  std::map<int, Observation> observe_actable() const;
  Info make_info(const CollisionReport* report) const;

  EnvConfig config_;
  TaskSpec task_;
  WorldState world_;
  GameStatus status_ = GameStatus::Running;
  Role turn_ = Role::Pursuer;  // two-swarm: whose half-step is next
  int cycle_cursor_ = -1;      // agent-by-agent: last actor id, -1 at round start
  std::uint64_t episode_seed_ = 0;
  bool started_ = false;
};

}  // namespace gridpe

#endif  // GRIDPE_ENV_H_
