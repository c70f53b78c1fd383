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

#include "gridpe/coevolution.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace gridpe {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kTagInit = 0x696e6974ULL;      // net initialization
constexpr std::uint64_t kTagEpoch = 0x65706f6368ULL;   // rollout collection
constexpr std::uint64_t kTagBaseline = 0x626c6e65ULL;  // baseline training
constexpr std::uint64_t kTagSingle = 0x73696e676cULL;  // single-side epochs

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing: " + path);
}

}  // namespace

AgentCheckpoint init_agent_nets(int observation_len, std::uint64_t seed,
                                std::uint64_t side) {
  Rng policy_rng(derive_seed(seed, kTagInit, side, 0));
  Rng value_rng(derive_seed(seed, kTagInit, side, 1));
  AgentCheckpoint nets;
  nets.policy = Mlp::he_init(observation_len, kActionCount, policy_rng);
  nets.value = Mlp::he_init(observation_len, 1, value_rng);
  // Training always proceeds from storable precision, so runs resumed from
  // disk and uninterrupted runs walk the same trajectory.
  quantize_parameters(&nets.policy);
  quantize_parameters(&nets.value);
  return nets;
}

std::string train_single_side(AgentCheckpoint* nets, Role side,
                              Policy& opponent_policy, const EnvConfig& env,
                              const LearnerConfig& learner, int epochs,
                              std::uint64_t seed) {
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  env.validate();
  learner.validate();
  std::string csv = kStatsHeader;
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    NetworkPolicy self(&nets->policy);
    Policy& as_pursuer =
        side == Role::Pursuer ? static_cast<Policy&>(self) : opponent_policy;
    Policy& as_evader =
        side == Role::Pursuer ? opponent_policy : static_cast<Policy&>(self);
    const CollectResult res = collect_experiences(
        env, as_pursuer, as_evader, learner.episodes_per_epoch,
        derive_seed(seed, kTagSingle, static_cast<std::uint64_t>(epoch)));
    const ExperienceBatch& batch =
        side == Role::Pursuer ? res.pursuer_batch : res.evader_batch;
    actor_critic_update(&nets->policy, &nets->value, batch, learner);
    csv += format_stats_row(1, epoch, role_name(side), -1,
                            side == Role::Pursuer
                                ? res.stats.mean_pursuer_reward
                                : res.stats.mean_evader_reward,
                            res.stats.capture_rate,
                            res.stats.collision_counts);
  }
  quantize_parameters(&nets->policy);
  quantize_parameters(&nets->value);
  return csv;
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::SpecSpec: return "spec_spec";
    case Scheme::GenSpec:  return "gen_spec";
    case Scheme::GenGen:   return "gen_gen";
  }
  return "spec_spec";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "spec_spec") return Scheme::SpecSpec;
  if (name == "gen_spec") return Scheme::GenSpec;
  if (name == "gen_gen") return Scheme::GenGen;
  throw std::invalid_argument(
      "unknown scheme: " + name + " (expected spec_spec, gen_spec, gen_gen)");
}

int opponent_index_gen2(int k, int k_p) {
  if (k < 1) throw std::invalid_argument("generation index must be >= 1");
  return k_p % k;
}

int opponent_index_gen3_evader(int k, int k_e) {
  if (k < 1) throw std::invalid_argument("generation index must be >= 1");
  return k_e % (k + 1);
}

void CoevolutionConfig::validate() const {
  if (generations < 1) throw std::invalid_argument("generations must be >= 1");
  if (pursuer_epochs < 1 || evader_epochs < 1) {
    throw std::invalid_argument("epoch budgets must be >= 1");
  }
  if (store_dir.empty()) throw std::invalid_argument("store_dir is required");
  env.validate();
  learner.validate();
}

CheckpointStore::CheckpointStore(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) throw std::invalid_argument("store directory is required");
}

std::string CheckpointStore::generation_dir(int k) const {
  char name[32];
  std::snprintf(name, sizeof(name), "gen_%03d", k);
  return dir_ + "/" + name;
}

std::string CheckpointStore::pursuer_path(int k) const {
  return generation_dir(k) + "/pursuer.ckpt";
}

std::string CheckpointStore::evader_path(int k) const {
  return generation_dir(k) + "/evader.ckpt";
}

std::string CheckpointStore::stats_path(int k) const {
  return generation_dir(k) + "/stats.csv";
}

bool CheckpointStore::generation_complete(int k) const {
  return fs::exists(pursuer_path(k)) && fs::exists(evader_path(k)) &&
         fs::exists(stats_path(k));
}

int CheckpointStore::last_complete_generation() const {
  int k = 0;
  while (generation_complete(k)) ++k;
  return k - 1;
}

AgentCheckpoint CheckpointStore::load_pursuer(int k) const {
  return load_checkpoint(pursuer_path(k));
}

AgentCheckpoint CheckpointStore::load_evader(int k) const {
  return load_checkpoint(evader_path(k));
}

void CheckpointStore::write_generation(int k, const AgentCheckpoint& pursuer,
                                       const AgentCheckpoint& evader,
                                       const std::string& stats_csv) {
  fs::create_directories(generation_dir(k));
  save_checkpoint(pursuer_path(k), pursuer.policy, pursuer.value);
  save_checkpoint(evader_path(k), evader.policy, evader.value);
  // Stats land last: their presence marks the generation complete.
  write_text_file(stats_path(k), stats_csv);
}

std::string format_stats_row(int generation, int epoch, const char* role,
                             int opponent_index, double mean_reward,
                             double capture_rate,
                             const std::array<long, 3>& collisions) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%d,%s,%d,%.17g,%.17g,%ld,%ld,%ld\n",
                generation, epoch, role, opponent_index, mean_reward,
                capture_rate, collisions[0], collisions[1], collisions[2]);
  return buf;
}

CheckpointStore run_coevolution(const CoevolutionConfig& config) {
  config.validate();
  CheckpointStore store(config.store_dir);
  const int obs_len = observation_length(config.env.fov);

  if (!store.generation_complete(0)) {
    const AgentCheckpoint p0 = init_agent_nets(obs_len, config.seed, 0);
    const AgentCheckpoint e0 = init_agent_nets(obs_len, config.seed, 1);
    store.write_generation(0, p0, e0, kStatsHeader);
  }

  const int last = store.last_complete_generation();
  if (last >= config.generations) return store;
  AgentCheckpoint pursuer = store.load_pursuer(last);
  AgentCheckpoint evader = store.load_evader(last);

  std::map<int, AgentCheckpoint> pursuer_opponents;
  std::map<int, AgentCheckpoint> evader_opponents;
  const auto opponent = [&store](std::map<int, AgentCheckpoint>* cache, int idx,
                                 bool load_pursuer_side) -> const AgentCheckpoint& {
    auto it = cache->find(idx);
    if (it == cache->end()) {
      it = cache->emplace(idx, load_pursuer_side ? store.load_pursuer(idx)
                                                 : store.load_evader(idx))
               .first;
    }
    return it->second;
  };

  for (int k = last + 1; k <= config.generations; ++k) {
    std::string csv = kStatsHeader;

    for (int k_p = 1; k_p <= config.pursuer_epochs; ++k_p) {
      const int opp = config.scheme == Scheme::SpecSpec
                          ? k - 1
                          : opponent_index_gen2(k, k_p);
      const AgentCheckpoint& frozen = opponent(&evader_opponents, opp, false);
      NetworkPolicy self(&pursuer.policy);
      NetworkPolicy foe(&frozen.policy);
      const CollectResult res = collect_experiences(
          config.env, self, foe, config.learner.episodes_per_epoch,
          derive_seed(config.seed, kTagEpoch, 0, static_cast<std::uint64_t>(k),
                      static_cast<std::uint64_t>(k_p)));
      actor_critic_update(&pursuer.policy, &pursuer.value, res.pursuer_batch,
                          config.learner);
      csv += format_stats_row(k, k_p, "pursuer", opp,
                              res.stats.mean_pursuer_reward,
                              res.stats.capture_rate,
                              res.stats.collision_counts);
    }
    quantize_parameters(&pursuer.policy);
    quantize_parameters(&pursuer.value);

    for (int k_e = 1; k_e <= config.evader_epochs; ++k_e) {
      const int opp = config.scheme == Scheme::GenGen
                          ? opponent_index_gen3_evader(k, k_e)
                          : k;
      const AgentCheckpoint& frozen =
          opp == k ? pursuer : opponent(&pursuer_opponents, opp, true);
      NetworkPolicy self(&evader.policy);
      NetworkPolicy foe(&frozen.policy);
      const CollectResult res = collect_experiences(
          config.env, foe, self, config.learner.episodes_per_epoch,
          derive_seed(config.seed, kTagEpoch, 1, static_cast<std::uint64_t>(k),
                      static_cast<std::uint64_t>(k_e)));
      actor_critic_update(&evader.policy, &evader.value, res.evader_batch,
                          config.learner);
      csv += format_stats_row(k, k_e, "evader", opp,
                              res.stats.mean_evader_reward,
                              res.stats.capture_rate,
                              res.stats.collision_counts);
    }
    quantize_parameters(&evader.policy);
    quantize_parameters(&evader.value);

    store.write_generation(k, pursuer, evader, csv);
    pursuer_opponents.emplace(k, pursuer);
    evader_opponents.emplace(k, evader);
  }
  return store;
}

BaselineResult train_baselines(const CoevolutionConfig& config) {
  // Baselines reuse the coevolution budgets but tolerate a zero budget,
  // in which case they stay at their random initialization.
  if (config.pursuer_epochs < 0 || config.evader_epochs < 0) {
    throw std::invalid_argument("epoch budgets must be >= 0");
  }
  if (config.store_dir.empty()) {
    throw std::invalid_argument("store_dir is required");
  }
  config.env.validate();
  config.learner.validate();
  const int obs_len = observation_length(config.env.fov);

  const auto save_baseline = [&config](int which, const char* file,
                                       const AgentCheckpoint& nets,
                                       const std::string& csv) {
    const std::string dir =
        config.store_dir + "/baseline" + std::to_string(which);
    fs::create_directories(dir);
    save_checkpoint(dir + "/" + file, nets.policy, nets.value);
    write_text_file(dir + "/stats.csv", csv);
  };

  BaselineResult result;
  RandomPolicy random;

  result.pursuer_vs_random = init_agent_nets(obs_len, config.seed, 2);
  save_baseline(1, "pursuer.ckpt", result.pursuer_vs_random,
                train_single_side(&result.pursuer_vs_random, Role::Pursuer,
                                  random, config.env, config.learner,
                                  config.pursuer_epochs,
                                  derive_seed(config.seed, kTagBaseline, 1)));

  result.evader_vs_random = init_agent_nets(obs_len, config.seed, 3);
  save_baseline(2, "evader.ckpt", result.evader_vs_random,
                train_single_side(&result.evader_vs_random, Role::Evader,
                                  random, config.env, config.learner,
                                  config.evader_epochs,
                                  derive_seed(config.seed, kTagBaseline, 2)));

  result.evader_vs_trained = init_agent_nets(obs_len, config.seed, 4);
  NetworkPolicy trained_pursuer(&result.pursuer_vs_random.policy);
  save_baseline(3, "evader.ckpt", result.evader_vs_trained,
                train_single_side(&result.evader_vs_trained, Role::Evader,
                                  trained_pursuer, config.env, config.learner,
                                  config.evader_epochs,
                                  derive_seed(config.seed, kTagBaseline, 3)));
  return result;
}

}  // namespace gridpe
