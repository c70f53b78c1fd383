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

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "gridpe/rng.hpp"

using namespace gridpe;

namespace {

template <typename T>
std::vector<T> random_vec(std::size_t count, Rng& rng) {
  std::vector<T> v(count);
  for (T& x : v) x = static_cast<T>(rng.next_unit() * 2.0 - 1.0);
  return v;
}

// Plain triple-loop references. Deliberately independent of the kernel
// code paths, including summation order.
template <typename T>
void naive_forward(const std::vector<T>& x, const std::vector<T>& w,
                   const std::vector<T>& b, std::vector<T>& y, int n,
                   int in_dim, int out_dim) {
  y.assign(static_cast<std::size_t>(n) * out_dim, T(0));
  for (int i = 0; i < n; ++i) {
    for (int o = 0; o < out_dim; ++o) {
      T acc = b[o];
      for (int k = 0; k < in_dim; ++k) {
        acc += x[static_cast<std::size_t>(i) * in_dim + k] *
               w[static_cast<std::size_t>(o) * in_dim + k];
      }
      y[static_cast<std::size_t>(i) * out_dim + o] = acc;
    }
  }
}

template <typename T>
void naive_backward_data(const std::vector<T>& dy, const std::vector<T>& w,
                         std::vector<T>& dx, int n, int in_dim, int out_dim) {
  dx.assign(static_cast<std::size_t>(n) * in_dim, T(0));
  for (int i = 0; i < n; ++i) {
    for (int o = 0; o < out_dim; ++o) {
      for (int k = 0; k < in_dim; ++k) {
        dx[static_cast<std::size_t>(i) * in_dim + k] +=
            dy[static_cast<std::size_t>(i) * out_dim + o] *
            w[static_cast<std::size_t>(o) * in_dim + k];
      }
    }
  }
}

template <typename T>
void naive_backward_params(const std::vector<T>& dy, const std::vector<T>& x,
                           std::vector<T>& dw, std::vector<T>& db, int n,
                           int in_dim, int out_dim) {
  dw.assign(static_cast<std::size_t>(out_dim) * in_dim, T(0));
  db.assign(out_dim, T(0));
  for (int i = 0; i < n; ++i) {
    for (int o = 0; o < out_dim; ++o) {
      const T g = dy[static_cast<std::size_t>(i) * out_dim + o];
      db[o] += g;
      for (int k = 0; k < in_dim; ++k) {
        dw[static_cast<std::size_t>(o) * in_dim + k] +=
            g * x[static_cast<std::size_t>(i) * in_dim + k];
      }
    }
  }
}

template <typename T>
double tolerance(int in_dim) {
  // Accumulation order differs from the naive reference, so allow the
  // usual length-scaled rounding slack. Exactness across backends is
  // asserted separately, bit for bit.
  const double eps = std::is_same_v<T, float> ? 2e-5 : 1e-13;
  return eps * in_dim;
}

template <typename T>
void check_close(const std::vector<T>& got, const std::vector<T>& want,
                 double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(static_cast<double>(got[i]) -
                   static_cast<double>(want[i])) <= tol);
  }
}

template <typename T>
void check_bitwise(const std::vector<T>& a, const std::vector<T>& b) {
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0);
}

// Ragged shapes on purpose: off-by-one sizes around the vector width.
struct Shape {
  int n, in_dim, out_dim;
};
const Shape kShapes[] = {{1, 1, 1},   {1, 7, 3},   {3, 8, 8},
                         {5, 77, 40}, {2, 31, 17}, {17, 13, 9}};

template <typename T>
void run_suite() {
  Rng rng(0x6b65726eULL);
  for (const Shape& s : kShapes) {
    CAPTURE(s.n);
    CAPTURE(s.in_dim);
    CAPTURE(s.out_dim);
    const auto x = random_vec<T>(static_cast<std::size_t>(s.n) * s.in_dim, rng);
    const auto w =
        random_vec<T>(static_cast<std::size_t>(s.out_dim) * s.in_dim, rng);
    const auto b = random_vec<T>(s.out_dim, rng);
    const auto dy =
        random_vec<T>(static_cast<std::size_t>(s.n) * s.out_dim, rng);

    std::vector<T> want, serial(static_cast<std::size_t>(s.n) * s.out_dim),
        parallel(serial.size());
    naive_forward(x, w, b, want, s.n, s.in_dim, s.out_dim);
    linear_forward(x.data(), w.data(), b.data(), serial.data(), s.n, s.in_dim,
                   s.out_dim, Backend::Serial);
    linear_forward(x.data(), w.data(), b.data(), parallel.data(), s.n,
                   s.in_dim, s.out_dim, Backend::OpenMp);
    check_close(serial, want, tolerance<T>(s.in_dim));
    check_bitwise(serial, parallel);

    std::vector<T> dx_want, dx_serial(static_cast<std::size_t>(s.n) * s.in_dim),
        dx_parallel(dx_serial.size());
    naive_backward_data(dy, w, dx_want, s.n, s.in_dim, s.out_dim);
    linear_backward_data(dy.data(), w.data(), dx_serial.data(), s.n, s.in_dim,
                         s.out_dim, Backend::Serial);
    linear_backward_data(dy.data(), w.data(), dx_parallel.data(), s.n,
                         s.in_dim, s.out_dim, Backend::OpenMp);
    check_close(dx_serial, dx_want, tolerance<T>(s.out_dim));
    check_bitwise(dx_serial, dx_parallel);

    std::vector<T> dw_want, db_want,
        dw_serial(static_cast<std::size_t>(s.out_dim) * s.in_dim),
        db_serial(s.out_dim), dw_parallel(dw_serial.size()),
        db_parallel(s.out_dim);
    naive_backward_params(dy, x, dw_want, db_want, s.n, s.in_dim, s.out_dim);
    linear_backward_params(dy.data(), x.data(), dw_serial.data(),
                           db_serial.data(), s.n, s.in_dim, s.out_dim,
                           Backend::Serial);
    linear_backward_params(dy.data(), x.data(), dw_parallel.data(),
                           db_parallel.data(), s.n, s.in_dim, s.out_dim,
                           Backend::OpenMp);
    check_close(dw_serial, dw_want, tolerance<T>(s.n));
    check_close(db_serial, db_want, tolerance<T>(s.n));
    check_bitwise(dw_serial, dw_parallel);
    check_bitwise(db_serial, db_parallel);
  }
}

}  // namespace

TEST_CASE("backend names are stable") {
  CHECK(std::string(backend_name(Backend::Serial)) == "serial");
  CHECK(std::string(backend_name(Backend::OpenMp)) == "openmp");
}

TEST_CASE("dense kernels match a naive reference in double precision") {
  run_suite<double>();
}

TEST_CASE("dense kernels match a naive reference in single precision") {
  run_suite<float>();
}

TEST_CASE("relu clamps forward and gates gradients backward") {
  for (Backend backend : {Backend::Serial, Backend::OpenMp}) {
    std::vector<double> y{-2.0, -0.0, 0.0, 0.5, 3.0, -1e-9, 7.0};
    relu_forward(y.data(), static_cast<std::int64_t>(y.size()), backend);
    const std::vector<double> want{0.0, 0.0, 0.0, 0.5, 3.0, 0.0, 7.0};
    CHECK(y == want);

    std::vector<double> grad{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0};
    relu_backward(grad.data(), y.data(), static_cast<std::int64_t>(y.size()),
                  backend);
    const std::vector<double> gated{0.0, 0.0, 0.0, 4.0, 5.0, 0.0, 7.0};
    CHECK(grad == gated);
  }
}

TEST_CASE("relu backends agree bit for bit on large ragged buffers") {
  Rng rng(3);
  const auto base = random_vec<float>(100003, rng);
  auto serial = base;
  auto parallel = base;
  relu_forward(serial.data(), 100003, Backend::Serial);
  relu_forward(parallel.data(), 100003, Backend::OpenMp);
  check_bitwise(serial, parallel);

  auto gs = base;
  auto gp = base;
  relu_backward(gs.data(), serial.data(), 100003, Backend::Serial);
  relu_backward(gp.data(), parallel.data(), 100003, Backend::OpenMp);
  check_bitwise(gs, gp);
}

TEST_CASE("axpy accumulates in place on both backends") {
  Rng rng(4);
  const auto g = random_vec<double>(10001, rng);
  const auto p0 = random_vec<double>(10001, rng);
  auto serial = p0;
  auto parallel = p0;
  axpy(-0.25, g.data(), serial.data(), 10001, Backend::Serial);
  axpy(-0.25, g.data(), parallel.data(), 10001, Backend::OpenMp);
  check_bitwise(serial, parallel);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(serial[i] == p0[i] + -0.25 * g[i]);
  }
}
