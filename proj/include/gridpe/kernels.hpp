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

#ifndef GRIDPE_KERNELS_HPP_
#define GRIDPE_KERNELS_HPP_

#include <cstdint>

namespace gridpe {

// Dense kernels behind the networks. Every kernel has a serial reference
// and an OpenMP variant that runs the exact same per-row inner loop, so
// the two backends are bit-identical for any thread count: parallel rows
// write disjoint outputs and each output is reduced in one fixed order.
enum class Backend : int { Serial = 0, OpenMp = 1 };

const char* backend_name(Backend b);

// Weights are row-major [out_dim x in_dim]: one contiguous row per output.

// y[n x out] = x[n x in] * w^T + b
template <typename T>
void linear_forward(const T* x, const T* w, const T* b, T* y, int n,
                    int in_dim, int out_dim, Backend backend);

// y = max(y, 0) elementwise
template <typename T>
void relu_forward(T* y, std::int64_t count, Backend backend);

// grad *= (activation > 0) elementwise, activation taken post-ReLU
template <typename T>
void relu_backward(T* grad, const T* activation, std::int64_t count,
                   Backend backend);

// dx[n x in] = dy[n x out] * w
template <typename T>
void linear_backward_data(const T* dy, const T* w, T* dx, int n, int in_dim,
                          int out_dim, Backend backend);

// dw[out x in] = dy^T * x, db[out] = column sums of dy; both overwritten
template <typename T>
void linear_backward_params(const T* dy, const T* x, T* dw, T* db, int n,
                            int in_dim, int out_dim, Backend backend);

// p += alpha * g elementwise
template <typename T>
void axpy(T alpha, const T* g, T* p, std::int64_t count, Backend backend);

}  // namespace gridpe

#endif  // GRIDPE_KERNELS_HPP_
