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

#include "gridpe/eval.hpp"

#include <exception>
#include <stdexcept>

namespace gridpe {
namespace {

constexpr std::uint64_t kTagCell = 0x63656c6cULL;

}  // namespace

EpisodeStats evaluate(Policy& pursuer_policy, Policy& evader_policy,
                      const EnvConfig& env_config, int episodes,
                      std::uint64_t seed) {
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  return collect_experiences(env_config, pursuer_policy, evader_policy,
                             episodes, seed)
      .stats;
}

std::uint64_t tournament_cell_seed(std::uint64_t seed, int i, int j) {
  return derive_seed(seed, kTagCell, static_cast<std::uint64_t>(i),
                     static_cast<std::uint64_t>(j));
}

TournamentMatrix tournament(const CheckpointStore& store,
                            const EnvConfig& env_config, int episodes_per_cell,
                            std::uint64_t seed) {
  const int last = store.last_complete_generation();
  if (last < 0) throw std::runtime_error("checkpoint store is empty");
  // Validate up front: exceptions must not escape the worker loop below.
  if (episodes_per_cell < 1) {
    throw std::invalid_argument("episodes must be >= 1");
  }
  env_config.validate();
  TournamentMatrix matrix;
  matrix.generations = last;
  matrix.capture_rates.resize(static_cast<std::size_t>(last + 1) * (last + 1));

  std::vector<AgentCheckpoint> pursuers;
  std::vector<AgentCheckpoint> evaders;
  pursuers.reserve(last + 1);
  evaders.reserve(last + 1);
  for (int k = 0; k <= last; ++k) {
    pursuers.push_back(store.load_pursuer(k));
    evaders.push_back(store.load_evader(k));
  }

  // Cells are seeded independently and write disjoint entries, so the
  // evaluation order is free and the loop can be split across workers.
  const int side_len = last + 1;
  const int cells = side_len * side_len;
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < cells; ++c) {
    try {
      const int i = c / side_len;
      const int j = c % side_len;
      NetworkPolicy p(&pursuers[i].policy);
      NetworkPolicy e(&evaders[j].policy);
      const EpisodeStats stats = evaluate(
          p, e, env_config, episodes_per_cell, tournament_cell_seed(seed, i, j));
      matrix.capture_rates[static_cast<std::size_t>(c)] = stats.capture_rate;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return matrix;
}

double generalization_score(const AgentCheckpoint& agent, Role role,
                            int generation_index,
                            const CheckpointStore& opposing_store,
                            const EnvConfig& env_config, int episodes_per_cell,
                            std::uint64_t seed) {
  const int last = opposing_store.last_complete_generation();
  if (last < 0) throw std::runtime_error("opposing store is empty");
  double sum = 0;
  if (role == Role::Pursuer) {
    NetworkPolicy p(&agent.policy);
    for (int j = 0; j <= last; ++j) {
      const AgentCheckpoint foe = opposing_store.load_evader(j);
      NetworkPolicy e(&foe.policy);
      sum += evaluate(p, e, env_config, episodes_per_cell,
                      tournament_cell_seed(seed, generation_index, j))
                 .capture_rate;
    }
  } else {
    NetworkPolicy e(&agent.policy);
    for (int i = 0; i <= last; ++i) {
      const AgentCheckpoint foe = opposing_store.load_pursuer(i);
      NetworkPolicy p(&foe.policy);
      sum += 1.0 - evaluate(p, e, env_config, episodes_per_cell,
                            tournament_cell_seed(seed, i, generation_index))
                       .capture_rate;
    }
  }
  return sum / (last + 1);
}

}  // namespace gridpe
