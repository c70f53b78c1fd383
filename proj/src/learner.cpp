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

#include "gridpe/learner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gridpe {
namespace {

double l2_norm(const Mlp& grad) {
  double sum = 0;
  for (const LinearLayer* l : {&grad.l1, &grad.l2, &grad.l3}) {
    for (Scalar v : l->w) sum += v * v;
    for (Scalar v : l->b) sum += v * v;
  }
  return std::sqrt(sum);
}

void require_finite(double loss, const char* which) {
  if (!std::isfinite(loss)) {
    throw std::runtime_error(std::string(which) + " loss went non-finite: " +
                             std::to_string(loss));
  }
}

}  // namespace

std::uint64_t rollout_episode_seed(std::uint64_t collect_seed, int episode) {
  constexpr std::uint64_t kEpisodeTag = 0x657069736f646573ULL;
  return derive_seed(collect_seed, kEpisodeTag,
                     static_cast<std::uint64_t>(episode));
}

std::uint64_t rollout_draw_seed(std::uint64_t collect_seed, int episode) {
  constexpr std::uint64_t kPolicyDrawTag = 0x616374696f6e7321ULL;
  return derive_seed(collect_seed, kPolicyDrawTag,
                     static_cast<std::uint64_t>(episode));
}

std::vector<double> discounted_returns(const ExperienceBatch& batch,
                                       double gamma) {
  std::vector<double> returns(batch.size());
  double g = 0;
  for (int i = batch.size() - 1; i >= 0; --i) {
    if (batch.dones[i]) g = 0;
    g = batch.rewards[i] + gamma * g;
    returns[i] = g;
  }
  return returns;
}

void LearnerConfig::validate() const {
  if (policy_lr <= 0 || value_lr <= 0) {
    throw std::invalid_argument("learning rates must be positive");
  }
  if (actor_updates_per_epoch < 0 || critic_updates_per_epoch < 0) {
    throw std::invalid_argument("update counts must be non-negative");
  }
  if (gamma < 0 || gamma > 1) {
    throw std::invalid_argument("discount must lie in [0, 1]");
  }
  if (episodes_per_epoch < 1) {
    throw std::invalid_argument("episodes_per_epoch must be positive");
  }
}

UpdateDiagnostics actor_critic_update(Mlp* policy_net, Mlp* value_net,
                                      const ExperienceBatch& batch,
                                      const LearnerConfig& config,
                                      Backend backend) {
  config.validate();
  const int n = batch.size();
  if (n == 0) throw std::invalid_argument("cannot update from an empty batch");
  if (batch.observation_length != policy_net->input_dim() ||
      batch.observation_length != value_net->input_dim()) {
    throw std::invalid_argument("batch observation length does not match nets");
  }
  const int obs_len = batch.observation_length;
  const std::vector<double> returns = discounted_returns(batch, config.gamma);

  // Advantage snapshot under the pre-update critic.
  ForwardCache cache;
  mlp_forward(*value_net, batch.observations.data(), n, &cache, backend);
  std::vector<double> advantages(n);
  for (int i = 0; i < n; ++i) advantages[i] = returns[i] - cache.out[i];

  UpdateDiagnostics diag;
  diag.transitions = n;

  Mlp policy_grad = Mlp::zeros(obs_len, policy_net->output_dim());
  std::vector<Scalar> dlogits(static_cast<std::size_t>(n) * kActionCount);
  for (int step = 0; step < config.actor_updates_per_epoch; ++step) {
    mlp_forward(*policy_net, batch.observations.data(), n, &cache, backend);
    softmax_rows(cache.out.data(), n, kActionCount);
    double loss = 0;
    for (int i = 0; i < n; ++i) {
      const Scalar* probs = cache.out.data() +
                            static_cast<std::size_t>(i) * kActionCount;
      loss -= std::log(probs[batch.actions[i]]) * advantages[i];
      Scalar* d = dlogits.data() + static_cast<std::size_t>(i) * kActionCount;
      for (int j = 0; j < kActionCount; ++j) {
        const double onehot = j == batch.actions[i] ? 1.0 : 0.0;
        d[j] = (probs[j] - onehot) * advantages[i] / n;
      }
    }
    loss /= n;
    require_finite(loss, "policy");
    mlp_backward(*policy_net, batch.observations.data(), cache, dlogits.data(),
                 &policy_grad, backend);
    sgd_step(policy_net, policy_grad, config.policy_lr, backend);
    diag.policy_loss = loss;
  }
  diag.policy_grad_norm = config.actor_updates_per_epoch > 0
                              ? l2_norm(policy_grad)
                              : 0;

  Mlp value_grad = Mlp::zeros(obs_len, 1);
  std::vector<Scalar> dv(static_cast<std::size_t>(n));
  for (int step = 0; step < config.critic_updates_per_epoch; ++step) {
    mlp_forward(*value_net, batch.observations.data(), n, &cache, backend);
    double loss = 0;
    for (int i = 0; i < n; ++i) {
      const double err = cache.out[i] - returns[i];
      loss += err * err;
      dv[i] = 2.0 * err / n;
    }
    loss /= n;
    require_finite(loss, "value");
    mlp_backward(*value_net, batch.observations.data(), cache, dv.data(),
                 &value_grad, backend);
    sgd_step(value_net, value_grad, config.value_lr, backend);
    diag.value_loss = loss;
  }
  diag.value_grad_norm = config.critic_updates_per_epoch > 0
                             ? l2_norm(value_grad)
                             : 0;
  return diag;
}

namespace {

struct OpenTransition {
  bool active = false;
  std::vector<float> obs;
  int action = 0;
  double reward = 0;
};

struct Transition {
  std::vector<float> obs;
  int action = 0;
  double reward = 0;
  std::vector<float> next_obs;  // empty when none
  bool done = false;
};

void append_to_batch(ExperienceBatch* batch, const Transition& t) {
  const int len = batch->observation_length;
  batch->observations.insert(batch->observations.end(), t.obs.begin(),
                             t.obs.end());
  batch->actions.push_back(t.action);
  batch->rewards.push_back(t.reward);
  if (t.next_obs.empty()) {
    batch->next_observations.insert(batch->next_observations.end(), len, 0.0);
  } else {
    batch->next_observations.insert(batch->next_observations.end(),
                                    t.next_obs.begin(), t.next_obs.end());
  }
  batch->dones.push_back(t.done ? 1 : 0);
}

}  // namespace

CollectResult collect_experiences(const EnvConfig& env_config,
                                  Policy& pursuer_policy,
                                  Policy& evader_policy, int episodes,
                                  std::uint64_t seed) {
  if (episodes < 0) throw std::invalid_argument("episodes must be >= 0");
  CollectResult result;
  const int obs_len = observation_length(env_config.fov);
  result.pursuer_batch.observation_length = obs_len;
  result.evader_batch.observation_length = obs_len;
  if (episodes == 0) return result;

  Env env(env_config);
  const int agent_count = env_config.pursuers + env_config.evaders;
  double captured_sum = 0;
  double all_captured_sum = 0;
  double steps_sum = 0;
  double pursuer_reward_sum = 0;
  double evader_reward_sum = 0;

  for (int e = 0; e < episodes; ++e) {
    ResetOutcome start = env.reset(rollout_episode_seed(seed, e));
    Rng draw_rng(rollout_draw_seed(seed, e));
    std::map<int, Observation> obs_map = std::move(start.observations);
    std::vector<OpenTransition> open(agent_count);
    std::vector<std::vector<Transition>> trajectory(agent_count);

    auto close = [&](int id, const std::vector<float>* next_obs, bool done) {
      OpenTransition& o = open[id];
      Transition t;
      t.obs = std::move(o.obs);
      t.action = o.action;
      t.reward = o.reward;
      if (next_obs != nullptr) t.next_obs = *next_obs;
      t.done = done;
      trajectory[id].push_back(std::move(t));
      o.active = false;
      o.reward = 0;
    };

    while (!env.done()) {
      const std::vector<int> actors = env.next_actors();
      std::map<int, Action> joint;
      for (int id : actors) {
        Policy& policy = env.world().agents[id].role == Role::Pursuer
                             ? pursuer_policy
                             : evader_policy;
        joint.emplace(id, policy.act(obs_map.at(id), draw_rng));
      }
      StepOutcome outcome;
      switch (env.config().effective_mode()) {
        case InteractionMode::TwoSwarm:
          outcome = env.step_two_swarm(env.next_swarm(), joint);
          break;
        case InteractionMode::AgentByAgent:
          outcome = env.step_agent_by_agent(actors.at(0), joint.at(actors.at(0)));
          break;
        default:
          outcome = env.step_simultaneous(joint);
          break;
      }
      // An actor's previous transition closes now: its next decision state
      // is the observation it just acted from.
      for (const auto& [id, action] : joint) {
        if (open[id].active) close(id, &obs_map.at(id).data, false);
        open[id].active = true;
        open[id].obs = obs_map.at(id).data;
        open[id].action = static_cast<int>(action);
        open[id].reward = 0;
      }
      for (const auto& [id, r] : outcome.rewards) {
        if (open[id].active) open[id].reward += r;
        if (env.world().agents[id].role == Role::Pursuer) {
          pursuer_reward_sum += r;
        } else {
          evader_reward_sum += r;
        }
      }
      // Agents that died or froze this step never act again.
      for (int id = 0; id < agent_count; ++id) {
        if (open[id].active &&
            (!outcome.info.alive[id] || outcome.info.captured[id])) {
          close(id, nullptr, true);
        }
      }
      for (int t = 0; t < 3; ++t) {
        result.stats.collision_counts[t] += outcome.info.collision_counts[t];
      }
      obs_map = std::move(outcome.observations);
    }
    for (int id = 0; id < agent_count; ++id) {
      if (open[id].active) {
        auto it = obs_map.find(id);
        close(id, it != obs_map.end() ? &it->second.data : nullptr, true);
      }
    }
    for (int id = 0; id < agent_count; ++id) {
      ExperienceBatch& batch = env.world().agents[id].role == Role::Pursuer
                                   ? result.pursuer_batch
                                   : result.evader_batch;
      for (const Transition& t : trajectory[id]) append_to_batch(&batch, t);
    }

    int captured = 0;
    for (const AgentRecord& a : env.world().agents) {
      if (a.role == Role::Evader && a.captured) ++captured;
    }
    captured_sum += static_cast<double>(captured) / env_config.evaders;
    if (env.world().free_evader_count() == 0) all_captured_sum += 1;
    steps_sum += env.world().step_index;
  }

  result.stats.episodes = episodes;
  result.stats.capture_rate = captured_sum / episodes;
  result.stats.all_captured_rate = all_captured_sum / episodes;
  result.stats.mean_steps = steps_sum / episodes;
  result.stats.mean_pursuer_reward =
      pursuer_reward_sum / (static_cast<double>(episodes) * env_config.pursuers);
  result.stats.mean_evader_reward =
      evader_reward_sum / (static_cast<double>(episodes) * env_config.evaders);
  return result;
}

}  // namespace gridpe
