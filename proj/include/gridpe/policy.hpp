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

#ifndef GRIDPE_POLICY_HPP_
#define GRIDPE_POLICY_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gridpe/observation.hpp"
#include "gridpe/rng.hpp"
#include "gridpe/world.hpp"

namespace gridpe {

// All policies, scripted and learned, act from the egocentric observation
// alone, so baseline comparisons are information-fair.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Action act(const Observation& obs, Rng& rng) = 0;
};

// Uniform over the 5 actions.
class RandomPolicy : public Policy {
 public:
  Action act(const Observation& obs, Rng& rng) override;
};

// Moves to minimize Manhattan distance to the nearest opponent-channel
// cell; candidate moves onto blocker cells are skipped; ties break in the
// fixed order Up, Down, Left, Right, Stay. Stays when no opponent is
// visible.
class GreedyPursuerPolicy : public Policy {
 public:
  Action act(const Observation& obs, Rng& rng) override;
};

// Moves to maximize the minimum Manhattan distance to visible opponents,
// with the same blocker skipping and tie order. Stays when none visible.
class GreedyEvaderPolicy : public Policy {
 public:
  Action act(const Observation& obs, Rng& rng) override;
};

// Stable config tokens: random, greedy_pursuer, greedy_evader.
std::unique_ptr<Policy> make_policy(const std::string& name);

// Draws happen in ascending agent id order, one per agent.
std::map<int, Action> act_all(Policy& policy,
                              const std::map<int, Observation>& observations,
                              Rng& rng);

}  // namespace gridpe

#endif  // GRIDPE_POLICY_HPP_
