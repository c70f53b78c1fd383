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

#include "gridpe/nn.hpp"

#include <cmath>
#include <stdexcept>

namespace gridpe {
namespace {

LinearLayer zero_layer(int in_dim, int out_dim) {
  LinearLayer l;
  l.in_dim = in_dim;
  l.out_dim = out_dim;
  l.w.assign(static_cast<std::size_t>(in_dim) * out_dim, 0);
  l.b.assign(static_cast<std::size_t>(out_dim), 0);
  return l;
}

void he_fill(LinearLayer* l, Rng& rng) {
  const Scalar scale = std::sqrt(2.0 / l->in_dim);
  for (Scalar& v : l->w) v = scale * rng.next_gaussian();
}

}  // namespace

Mlp Mlp::zeros(int input_dim, int output_dim) {
  if (input_dim < 1 || output_dim < 1) {
    throw std::invalid_argument("network dimensions must be positive");
  }
  Mlp net;
  net.l1 = zero_layer(input_dim, kHidden1);
  net.l2 = zero_layer(kHidden1, kHidden2);
  net.l3 = zero_layer(kHidden2, output_dim);
  return net;
}

Mlp Mlp::he_init(int input_dim, int output_dim, Rng& rng) {
  Mlp net = zeros(input_dim, output_dim);
  he_fill(&net.l1, rng);
  he_fill(&net.l2, rng);
  he_fill(&net.l3, rng);
  return net;
}

std::size_t Mlp::parameter_count() const {
  return l1.w.size() + l1.b.size() + l2.w.size() + l2.b.size() + l3.w.size() +
         l3.b.size();
}

void mlp_forward(const Mlp& net, const Scalar* x, int n, ForwardCache* cache,
                 Backend backend) {
  cache->n = n;
  cache->h1.resize(static_cast<std::size_t>(n) * kHidden1);
  cache->h2.resize(static_cast<std::size_t>(n) * kHidden2);
  cache->out.resize(static_cast<std::size_t>(n) * net.output_dim());
  linear_forward(x, net.l1.w.data(), net.l1.b.data(), cache->h1.data(), n,
                 net.l1.in_dim, net.l1.out_dim, backend);
  relu_forward(cache->h1.data(), static_cast<std::int64_t>(cache->h1.size()),
               backend);
  linear_forward(cache->h1.data(), net.l2.w.data(), net.l2.b.data(),
                 cache->h2.data(), n, net.l2.in_dim, net.l2.out_dim, backend);
  relu_forward(cache->h2.data(), static_cast<std::int64_t>(cache->h2.size()),
               backend);
  linear_forward(cache->h2.data(), net.l3.w.data(), net.l3.b.data(),
                 cache->out.data(), n, net.l3.in_dim, net.l3.out_dim, backend);
}

void mlp_backward(const Mlp& net, const Scalar* x, const ForwardCache& cache,
                  const Scalar* dout, Mlp* grad, Backend backend) {
  const int n = cache.n;
  linear_backward_params(dout, cache.h2.data(), grad->l3.w.data(),
                         grad->l3.b.data(), n, net.l3.in_dim, net.l3.out_dim,
                         backend);
  std::vector<Scalar> dh2(static_cast<std::size_t>(n) * kHidden2);
  linear_backward_data(dout, net.l3.w.data(), dh2.data(), n, net.l3.in_dim,
                       net.l3.out_dim, backend);
  relu_backward(dh2.data(), cache.h2.data(),
                static_cast<std::int64_t>(dh2.size()), backend);

  linear_backward_params(dh2.data(), cache.h1.data(), grad->l2.w.data(),
                         grad->l2.b.data(), n, net.l2.in_dim, net.l2.out_dim,
                         backend);
  std::vector<Scalar> dh1(static_cast<std::size_t>(n) * kHidden1);
  linear_backward_data(dh2.data(), net.l2.w.data(), dh1.data(), n,
                       net.l2.in_dim, net.l2.out_dim, backend);
  relu_backward(dh1.data(), cache.h1.data(),
                static_cast<std::int64_t>(dh1.size()), backend);

  linear_backward_params(dh1.data(), x, grad->l1.w.data(), grad->l1.b.data(),
                         n, net.l1.in_dim, net.l1.out_dim, backend);
}

void sgd_step(Mlp* net, const Mlp& grad, Scalar lr, Backend backend) {
  for (auto [dst, src] : {std::pair{&net->l1, &grad.l1},
                          std::pair{&net->l2, &grad.l2},
                          std::pair{&net->l3, &grad.l3}}) {
    axpy(-lr, src->w.data(), dst->w.data(),
         static_cast<std::int64_t>(dst->w.size()), backend);
    axpy(-lr, src->b.data(), dst->b.data(),
         static_cast<std::int64_t>(dst->b.size()), backend);
  }
}

void softmax_rows(Scalar* logits, int n, int m) {
  for (int i = 0; i < n; ++i) {
    Scalar* row = logits + static_cast<std::size_t>(i) * m;
    Scalar hi = row[0];
    for (int j = 1; j < m; ++j) hi = std::max(hi, row[j]);
    Scalar sum = 0;
    for (int j = 0; j < m; ++j) {
      row[j] = std::exp(row[j] - hi);
      sum += row[j];
    }
    for (int j = 0; j < m; ++j) row[j] /= sum;
  }
}

namespace {

std::vector<Scalar> to_input(const Mlp& net, const Observation& obs) {
  if (static_cast<int>(obs.data.size()) != net.input_dim()) {
    throw std::invalid_argument("observation length does not match network input");
  }
  return std::vector<Scalar>(obs.data.begin(), obs.data.end());
}

}  // namespace

std::array<double, kActionCount> policy_forward(const Mlp& net,
                                                const Observation& obs) {
  if (net.output_dim() != kActionCount) {
    throw std::invalid_argument("policy network must emit one logit per action");
  }
  const std::vector<Scalar> x = to_input(net, obs);
  ForwardCache cache;
  mlp_forward(net, x.data(), 1, &cache, Backend::Serial);
  softmax_rows(cache.out.data(), 1, kActionCount);
  std::array<double, kActionCount> probs{};
  for (int j = 0; j < kActionCount; ++j) probs[j] = cache.out[j];
  return probs;
}

double value_forward(const Mlp& net, const Observation& obs) {
  if (net.output_dim() != 1) {
    throw std::invalid_argument("value network must emit one scalar");
  }
  const std::vector<Scalar> x = to_input(net, obs);
  ForwardCache cache;
  mlp_forward(net, x.data(), 1, &cache, Backend::Serial);
  return cache.out[0];
}

Action NetworkPolicy::act(const Observation& obs, Rng& rng) {
  const std::array<double, kActionCount> probs = policy_forward(*net_, obs);
  const double u = rng.next_unit();
  double cum = 0;
  for (int j = 0; j < kActionCount; ++j) {
    cum += probs[j];
    if (u < cum) return static_cast<Action>(j);
  }
  return static_cast<Action>(kActionCount - 1);
}

}  // namespace gridpe
