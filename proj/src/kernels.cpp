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

#include "gridpe/kernels.hpp"

namespace gridpe {
namespace {

// Shared inner loops. Both backends call these per row; bit-equality of
// the backends rests on that, so any change here must keep a single fixed
// reduction order per output element.

// Eight accumulators on contiguous lanes: each lane owns a fixed subset of
// the sum, so the compiler may bundle them into vector FMAs without any
// reassociation, and the result is identical at any vector width.
template <typename T>
inline T dot8(const T* a, const T* b, int n) {
  T acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    for (int j = 0; j < 8; ++j) acc[j] += a[i + j] * b[i + j];
  }
  T tail = 0;
  for (; i < n; ++i) tail += a[i] * b[i];
  const T lo = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  const T hi = (acc[4] + acc[5]) + (acc[6] + acc[7]);
  return (lo + hi) + tail;
}

template <typename T>
inline void forward_row(const T* x_row, const T* w, const T* b, T* y_row,
                        int in_dim, int out_dim) {
  for (int o = 0; o < out_dim; ++o) {
    y_row[o] = b[o] + dot8(x_row + 0, w + static_cast<std::int64_t>(o) * in_dim,
                           in_dim);
  }
}

template <typename T>
inline void backward_data_row(const T* dy_row, const T* w, T* dx_row,
                              int in_dim, int out_dim) {
  for (int k = 0; k < in_dim; ++k) dx_row[k] = 0;
  for (int o = 0; o < out_dim; ++o) {
    const T c = dy_row[o];
    const T* w_row = w + static_cast<std::int64_t>(o) * in_dim;
    for (int k = 0; k < in_dim; ++k) dx_row[k] += c * w_row[k];
  }
}

template <typename T>
inline void backward_param_row(const T* dy, const T* x, T* dw_row, T* db_out,
                               int o, int n, int in_dim, int out_dim) {
  for (int k = 0; k < in_dim; ++k) dw_row[k] = 0;
  T bias = 0;
  for (int i = 0; i < n; ++i) {
    const T c = dy[static_cast<std::int64_t>(i) * out_dim + o];
    bias += c;
    const T* x_row = x + static_cast<std::int64_t>(i) * in_dim;
    for (int k = 0; k < in_dim; ++k) dw_row[k] += c * x_row[k];
  }
  *db_out = bias;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::Serial ? "serial" : "openmp";
}

template <typename T>
void linear_forward(const T* x, const T* w, const T* b, T* y, int n,
                    int in_dim, int out_dim, Backend backend) {
  if (backend == Backend::OpenMp) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      forward_row(x + static_cast<std::int64_t>(i) * in_dim, w, b,
                  y + static_cast<std::int64_t>(i) * out_dim, in_dim, out_dim);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      forward_row(x + static_cast<std::int64_t>(i) * in_dim, w, b,
                  y + static_cast<std::int64_t>(i) * out_dim, in_dim, out_dim);
    }
  }
}

template <typename T>
void relu_forward(T* y, std::int64_t count, Backend backend) {
  if (backend == Backend::OpenMp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      if (y[i] < 0) y[i] = 0;
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      if (y[i] < 0) y[i] = 0;
    }
  }
}

template <typename T>
void relu_backward(T* grad, const T* activation, std::int64_t count,
                   Backend backend) {
  if (backend == Backend::OpenMp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      if (activation[i] <= 0) grad[i] = 0;
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      if (activation[i] <= 0) grad[i] = 0;
    }
  }
}

template <typename T>
void linear_backward_data(const T* dy, const T* w, T* dx, int n, int in_dim,
                          int out_dim, Backend backend) {
  if (backend == Backend::OpenMp) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      backward_data_row(dy + static_cast<std::int64_t>(i) * out_dim, w,
                        dx + static_cast<std::int64_t>(i) * in_dim, in_dim,
                        out_dim);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      backward_data_row(dy + static_cast<std::int64_t>(i) * out_dim, w,
                        dx + static_cast<std::int64_t>(i) * in_dim, in_dim,
                        out_dim);
    }
  }
}

template <typename T>
void linear_backward_params(const T* dy, const T* x, T* dw, T* db, int n,
                            int in_dim, int out_dim, Backend backend) {
  if (backend == Backend::OpenMp) {
#pragma omp parallel for schedule(static)
    for (int o = 0; o < out_dim; ++o) {
      backward_param_row(dy, x, dw + static_cast<std::int64_t>(o) * in_dim,
                         db + o, o, n, in_dim, out_dim);
    }
  } else {
    for (int o = 0; o < out_dim; ++o) {
      backward_param_row(dy, x, dw + static_cast<std::int64_t>(o) * in_dim,
                         db + o, o, n, in_dim, out_dim);
    }
  }
}

template <typename T>
void axpy(T alpha, const T* g, T* p, std::int64_t count, Backend backend) {
  if (backend == Backend::OpenMp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) p[i] += alpha * g[i];
  } else {
    for (std::int64_t i = 0; i < count; ++i) p[i] += alpha * g[i];
  }
}

template void linear_forward<float>(const float*, const float*, const float*,
                                    float*, int, int, int, Backend);
template void linear_forward<double>(const double*, const double*,
                                     const double*, double*, int, int, int,
                                     Backend);
template void relu_forward<float>(float*, std::int64_t, Backend);
template void relu_forward<double>(double*, std::int64_t, Backend);
template void relu_backward<float>(float*, const float*, std::int64_t,
                                   Backend);
template void relu_backward<double>(double*, const double*, std::int64_t,
                                    Backend);
template void linear_backward_data<float>(const float*, const float*, float*,
                                          int, int, int, Backend);
template void linear_backward_data<double>(const double*, const double*,
                                           double*, int, int, int, Backend);
template void linear_backward_params<float>(const float*, const float*, float*,
                                            float*, int, int, int, Backend);
template void linear_backward_params<double>(const double*, const double*,
                                             double*, double*, int, int, int,
                                             Backend);
template void axpy<float>(float, const float*, float*, std::int64_t, Backend);
template void axpy<double>(double, const double*, double*, std::int64_t,
                           Backend);

}  // namespace gridpe
