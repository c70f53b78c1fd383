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

#ifndef GRIDPE_NN_HPP_
#define GRIDPE_NN_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "gridpe/kernels.hpp"
#include "gridpe/observation.hpp"
#include "gridpe/policy.hpp"
#include "gridpe/rng.hpp"

namespace gridpe {

// Training arithmetic runs in double; checkpoints store float32.
using Scalar = double;

inline constexpr int kHidden1 = 400;
inline constexpr int kHidden2 = 300;

struct LinearLayer {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<Scalar> w;  // [out_dim x in_dim] row-major
  std::vector<Scalar> b;  // [out_dim]
};

// input -> 400 -> 300 -> output, ReLU on the hidden layers, linear head.
// The same shape serves as its own gradient container.
struct Mlp {
  LinearLayer l1, l2, l3;

  static Mlp zeros(int input_dim, int output_dim);
  // He-scaled gaussian weights, zero biases; draws in layer then row-major
  // element order, so a seed pins every parameter.
  static Mlp he_init(int input_dim, int output_dim, Rng& rng);

  int input_dim() const { return l1.in_dim; }
  int output_dim() const { return l3.out_dim; }
  std::size_t parameter_count() const;
};

// Post-ReLU hidden activations and raw head outputs for a batch; kept so
// the backward pass can gate ReLU derivatives without recomputing.
struct ForwardCache {
  int n = 0;
  std::vector<Scalar> h1, h2, out;
};

void mlp_forward(const Mlp& net, const Scalar* x, int n, ForwardCache* cache,
                 Backend backend);

// dout is dL/d(raw head output), [n x output_dim]. Gradients overwrite.
void mlp_backward(const Mlp& net, const Scalar* x, const ForwardCache& cache,
                  const Scalar* dout, Mlp* grad, Backend backend);

// p -= lr * g over every parameter.
void sgd_step(Mlp* net, const Mlp& grad, Scalar lr, Backend backend);

// Numerically stable in-place softmax over each length-m row.
void softmax_rows(Scalar* logits, int n, int m);

// Single-observation heads. Throw std::invalid_argument on length mismatch.
std::array<double, kActionCount> policy_forward(const Mlp& net,
                                                const Observation& obs);
double value_forward(const Mlp& net, const Observation& obs);

// Plays a policy network by sampling its action distribution (inverse CDF
// in action index order, one uniform draw per act).
class NetworkPolicy : public Policy {
 public:
  explicit NetworkPolicy(const Mlp* net, Backend backend = Backend::OpenMp)
      : net_(net), backend_(backend) {}
  Action act(const Observation& obs, Rng& rng) override;

 private:
  const Mlp* net_;
  Backend backend_;
};

}  // namespace gridpe

#endif  // GRIDPE_NN_HPP_
