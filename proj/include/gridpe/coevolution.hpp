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

#ifndef GRIDPE_COEVOLUTION_HPP_
#define GRIDPE_COEVOLUTION_HPP_

#include <cstdint>
#include <string>

#include "gridpe/checkpoint.hpp"
#include "gridpe/env.hpp"
#include "gridpe/learner.hpp"

namespace gridpe {

// Opponent scheduling schemes. spec_spec trains each side against the
// other's newest frozen specialist; gen_spec cycles the pursuer over all
// past evader generations; gen_gen cycles both sides.
enum class Scheme : int { SpecSpec = 0, GenSpec = 1, GenGen = 2 };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Pursuer epochs under generalist schemes meet evader generation
// k_p mod k; epochs count from 1.
int opponent_index_gen2(int k, int k_p);
// Evader epochs under gen_gen meet pursuer generation k_e mod (k + 1),
// which includes the just-trained generation k.
int opponent_index_gen3_evader(int k, int k_e);

struct CoevolutionConfig {
  int generations = 30;      // N
  int pursuer_epochs = 400;  // N_p
  int evader_epochs = 400;   // N_e
  EnvConfig env;
  LearnerConfig learner;
  Scheme scheme = Scheme::SpecSpec;
  std::uint64_t seed = 0;
  std::string store_dir;

  void validate() const;
};

// Directory of generation snapshots: gen_000, gen_001, ... each holding
// pursuer.ckpt, evader.ckpt and stats.csv with that generation's per-epoch
// rows. stats.csv is written last and marks the generation complete.
class CheckpointStore {
 public:
  explicit CheckpointStore(std::string dir);

  const std::string& dir() const { return dir_; }
  std::string generation_dir(int k) const;
  std::string pursuer_path(int k) const;
  std::string evader_path(int k) const;
  std::string stats_path(int k) const;

  bool generation_complete(int k) const;
  // Highest N with generations 0..N all complete; -1 for an empty store.
  int last_complete_generation() const;

  AgentCheckpoint load_pursuer(int k) const;
  AgentCheckpoint load_evader(int k) const;

  // Expects pre-quantized nets; stats_csv includes the header line.
  void write_generation(int k, const AgentCheckpoint& pursuer,
                        const AgentCheckpoint& evader,
                        const std::string& stats_csv);

 private:
  std::string dir_;
};

inline constexpr char kStatsHeader[] =
    "generation,epoch,role,opponent_index,mean_reward,capture_rate,"
    "collisions_ao,collisions_aa,collisions_pe\n";

std::string format_stats_row(int generation, int epoch, const char* role,
                             int opponent_index, double mean_reward,
                             double capture_rate,
                             const std::array<long, 3>& collisions);

// Runs the selected scheme, resuming after the last complete generation.
// Checkpoints quantize to their stored precision the moment they freeze,
// so a resumed run is bit-identical to an uninterrupted one.
CheckpointStore run_coevolution(const CoevolutionConfig& config);

// Fresh He-initialized policy/value nets, pre-quantized to checkpoint
// precision; side disambiguates seeds for independently initialized nets.
AgentCheckpoint init_agent_nets(int observation_len, std::uint64_t seed,
                                std::uint64_t side);

// Trains one side in place against a fixed opponent for `epochs`; returns
// the per-epoch stats CSV and leaves the nets quantized.
std::string train_single_side(AgentCheckpoint* nets, Role side,
                              Policy& opponent_policy, const EnvConfig& env,
                              const LearnerConfig& learner, int epochs,
                              std::uint64_t seed);

struct BaselineResult {
  AgentCheckpoint pursuer_vs_random;   // baseline1
  AgentCheckpoint evader_vs_random;    // baseline2
  AgentCheckpoint evader_vs_trained;   // baseline3, opponent = baseline1
};

// Each baseline gets one generation's epoch budget. Writes under
// store_dir/baseline{1,2,3}.
BaselineResult train_baselines(const CoevolutionConfig& config);

}  // namespace gridpe

#endif  // GRIDPE_COEVOLUTION_HPP_
