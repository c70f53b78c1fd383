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

#ifndef GRIDPE_EVAL_HPP_
#define GRIDPE_EVAL_HPP_

#include <cstdint>
#include <vector>

#include "gridpe/coevolution.hpp"
#include "gridpe/learner.hpp"

namespace gridpe {

// Aggregate rollout metrics double as evaluation stats; capture_rate is
// the per-evader fraction captured, averaged over episodes.
using EpisodeStats = RolloutStats;

// Seeded deterministic evaluation. Episode e runs exactly the episode
// collect_experiences would run for (seed, e).
EpisodeStats evaluate(Policy& pursuer_policy, Policy& evader_policy,
                      const EnvConfig& env_config, int episodes,
                      std::uint64_t seed);

// Every tournament cell owns an order-independent seed; a standalone
// evaluate under the same cell seed reproduces the cell exactly.
std::uint64_t tournament_cell_seed(std::uint64_t seed, int i, int j);

struct TournamentMatrix {
  int generations = 0;                // N; the matrix is (N+1) x (N+1)
  std::vector<double> capture_rates;  // row-major; row i = pursuer gen i

  int side() const { return generations + 1; }
  double at(int i, int j) const {
    return capture_rates[static_cast<std::size_t>(i) * side() + j];
  }
};

// Full cross-generation cross-play; row/column 0 are the random initial
// policies. Throws on an incomplete store.
TournamentMatrix tournament(const CheckpointStore& store,
                            const EnvConfig& env_config, int episodes_per_cell,
                            std::uint64_t seed);

// Mean performance of one agent across every opposing generation, using
// the same cell seeds as tournament(): a pursuer's score over row i equals
// that matrix row's mean; an evader's score is the column mean of
// (1 - capture rate), so higher is better for both roles.
double generalization_score(const AgentCheckpoint& agent, Role role,
                            int generation_index,
                            const CheckpointStore& opposing_store,
                            const EnvConfig& env_config, int episodes_per_cell,
                            std::uint64_t seed);

}  // namespace gridpe

#endif  // GRIDPE_EVAL_HPP_
