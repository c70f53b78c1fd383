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

#ifndef GRIDPE_LEARNER_HPP_
#define GRIDPE_LEARNER_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "gridpe/env.hpp"
#include "gridpe/nn.hpp"
#include "gridpe/policy.hpp"

namespace gridpe {

// Flat per-team transition storage. Trajectories are stored one agent at a
// time, time-ordered, each ending with done = 1, so discounted returns can
// be rebuilt with a single backward scan.
struct ExperienceBatch {
  int observation_length = 0;
  std::vector<Scalar> observations;       // [n x observation_length]
  std::vector<int> actions;               // [n]
  std::vector<double> rewards;            // [n]
  std::vector<Scalar> next_observations;  // [n x observation_length], zeros
                                          // when the agent saw no next state
  std::vector<std::uint8_t> dones;        // [n]

  int size() const { return static_cast<int>(actions.size()); }
};

// Monte Carlo discounted returns per transition; trajectory boundaries are
// the done flags.
std::vector<double> discounted_returns(const ExperienceBatch& batch,
                                       double gamma);

struct LearnerConfig {
  double policy_lr = 3e-4;
  double value_lr = 1e-3;
  int actor_updates_per_epoch = 5;
  int critic_updates_per_epoch = 1;
  double gamma = 0.99;
  int episodes_per_epoch = 10;

  void validate() const;
};

struct UpdateDiagnostics {
  double policy_loss = 0;
  double value_loss = 0;
  double policy_grad_norm = 0;
  double value_grad_norm = 0;
  int transitions = 0;
};

// Advantages are Monte Carlo returns minus the value estimate under the
// pre-update value net, frozen across the actor steps. Throws
// std::invalid_argument on an empty batch and std::runtime_error when a
// loss goes non-finite.
UpdateDiagnostics actor_critic_update(Mlp* policy_net, Mlp* value_net,
                                      const ExperienceBatch& batch,
                                      const LearnerConfig& config,
                                      Backend backend = Backend::OpenMp);

struct RolloutStats {
  int episodes = 0;
  double capture_rate = 0;       // captured evaders / evaders, mean per episode
  double all_captured_rate = 0;  // episodes ending with no free evader
  double mean_steps = 0;
  std::array<long, 3> collision_counts{};  // summed, by CollisionType
  double mean_pursuer_reward = 0;  // per agent per episode
  double mean_evader_reward = 0;
};

struct CollectResult {
  ExperienceBatch pursuer_batch;
  ExperienceBatch evader_batch;
  RolloutStats stats;
};

// Episode e of a collection run resets the env with rollout_episode_seed
// and draws policy actions from rollout_draw_seed, so any single episode
// can be reproduced in isolation.
std::uint64_t rollout_episode_seed(std::uint64_t collect_seed, int episode);
std::uint64_t rollout_draw_seed(std::uint64_t collect_seed, int episode);

// Seeded rollouts under the task's interaction model. One policy rng per
// episode; draws follow acting order (ascending agent id within a step).
// An agent's transition reward accumulates everything it receives between
// its own consecutive actions, so turn-taking credit lands on the action
// that caused it.
CollectResult collect_experiences(const EnvConfig& env_config,
                                  Policy& pursuer_policy,
                                  Policy& evader_policy, int episodes,
                                  std::uint64_t seed);

}  // namespace gridpe

#endif  // GRIDPE_LEARNER_HPP_
