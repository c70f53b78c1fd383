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

#ifndef GRIDPE_CHECKPOINT_HPP_
#define GRIDPE_CHECKPOINT_HPP_

#include <string>

#include "gridpe/nn.hpp"

namespace gridpe {

// File format, all little-endian: magic "GPCK", version u32, layer count
// u32 (six: policy net then value net, three layers each), then per layer
// rows u32 and cols u32; then per layer row-major float32 weights followed
// by float32 biases, in the same layer order.

struct AgentCheckpoint {
  Mlp policy;
  Mlp value;
};

// Rounds every parameter through float32. Saving quantized nets and then
// continuing to train from them makes a reloaded run bit-identical to the
// uninterrupted one.
void quantize_parameters(Mlp* net);

// Writers expect pre-quantized nets; save does not mutate its inputs.
void save_checkpoint(const std::string& path, const Mlp& policy,
                     const Mlp& value);

// Throws std::runtime_error naming the path on missing file, bad magic or
// version, shape chain mismatch, or size mismatch.
AgentCheckpoint load_checkpoint(const std::string& path);

}  // namespace gridpe

#endif  // GRIDPE_CHECKPOINT_HPP_
