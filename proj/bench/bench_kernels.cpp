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

// Times the serial and OpenMP kernel backends on the layer shapes the
// training networks actually use and prints GFLOP/s side by side. The two
// backends share their inner loops, so this measures scheduling overhead
// and scaling, not numerics; equality is covered by the unit tests.

#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

#include "gridpe/kernels.hpp"
#include "gridpe/rng.hpp"

namespace {

using gridpe::Backend;
using gridpe::Rng;

template <typename T>
std::vector<T> random_vec(std::size_t n, Rng* rng) {
  std::vector<T> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<T>(rng->next_unit() * 2.0 - 1.0);
  }
  return v;
}

struct Shape {
  int batch;
  int in;
  int out;
};

template <typename T>
void bench_linear(const char* type_name, const Shape& shape) {
  Rng rng(0x62656e63ULL);
  const auto x = random_vec<T>(
      static_cast<std::size_t>(shape.batch) * shape.in, &rng);
  const auto w = random_vec<T>(
      static_cast<std::size_t>(shape.out) * shape.in, &rng);
  const auto b = random_vec<T>(static_cast<std::size_t>(shape.out), &rng);
  std::vector<T> y(static_cast<std::size_t>(shape.batch) * shape.out);

  const double flops_per_call =
      2.0 * shape.batch * static_cast<double>(shape.in) * shape.out;
  // Aim for roughly 0.2s per measurement.
  const double probe_start = omp_get_wtime();
  gridpe::linear_forward(x.data(), w.data(), b.data(), y.data(), shape.batch,
                         shape.in, shape.out, Backend::Serial);
  const double probe = omp_get_wtime() - probe_start;
  int reps = probe > 0 ? static_cast<int>(0.2 / probe) : 1000000;
  if (reps < 10) reps = 10;
  if (reps > 1000000) reps = 1000000;

  double gflops[2] = {0, 0};
  const Backend backends[2] = {Backend::Serial, Backend::OpenMp};
  for (int which = 0; which < 2; ++which) {
    const double start = omp_get_wtime();
    for (int r = 0; r < reps; ++r) {
      gridpe::linear_forward(x.data(), w.data(), b.data(), y.data(),
                             shape.batch, shape.in, shape.out,
                             backends[which]);
    }
    const double elapsed = omp_get_wtime() - start;
    gflops[which] = flops_per_call * reps / elapsed / 1e9;
  }
  std::printf("%-6s batch=%-5d %4dx%-4d  serial %7.2f GFLOP/s  openmp %7.2f "
              "GFLOP/s  (x%.2f, %d reps)\n",
              type_name, shape.batch, shape.in, shape.out, gflops[0],
              gflops[1], gflops[1] / gflops[0], reps);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  // Layer shapes of the policy/value networks at fov 2 (input 77) plus the
  // batch sizes seen in action selection (1) and full-batch updates.
  const Shape shapes[] = {
      {1, 77, 400},    {1, 400, 300},    {1, 300, 5},
      {256, 77, 400},  {256, 400, 300},  {256, 300, 5},
      {2048, 77, 400}, {2048, 400, 300}, {2048, 300, 5},
  };
  for (const Shape& s : shapes) bench_linear<float>("float", s);
  std::printf("\n");
  for (const Shape& s : shapes) bench_linear<double>("double", s);
  return 0;
}
