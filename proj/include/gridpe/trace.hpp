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

#ifndef GRIDPE_TRACE_HPP_
#define GRIDPE_TRACE_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "gridpe/env.hpp"
#include "gridpe/policy.hpp"

namespace gridpe {

// Traces are newline-delimited JSON: a header line carrying the full env
// config and the episode seed, then one line per tick with post-tick state
// (every agent's position, flags, the action it took and reward it got),
// collision events and captures. Keys serialize sorted and doubles round
// trip exactly, so identical episodes write identical bytes.

// Runs the episode collect_experiences(seed, ...) would run as episode
// number episode_index, returning its trace text.
std::string record_episode_trace(const EnvConfig& config,
                                 Policy& pursuer_policy,
                                 Policy& evader_policy,
                                 std::uint64_t collect_seed,
                                 int episode_index);

// Re-executes the recorded actions tick by tick and demands byte-level
// agreement with each recorded line. Throws std::runtime_error naming the
// 1-based line on corrupt records or divergence.
void replay_trace(std::istream& in);

// Collision events summed over the trace's ticks, by CollisionType.
std::array<long, 3> trace_collision_totals(std::istream& in);

}  // namespace gridpe

#endif  // GRIDPE_TRACE_HPP_
