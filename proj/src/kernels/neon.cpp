// Copyright 2026-present the minrev project
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

#include "minrev/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace minrev::kernels {

namespace {

// NEON has no gather; loads are lane-wise but the multiply-add is vectorized.
double sparse_dense_dot_neon(const std::uint32_t* idx, const double* val,
                             std::size_t n, const double* dense) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t g = {dense[idx[i]], dense[idx[i + 1]]};
    float64x2_t v = vld1q_f64(val + i);
    acc = vfmaq_f64(acc, v, g);
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += val[i] * dense[idx[i]];
  return s;
}

double sum_squares_neon(const double* v, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t x = vld1q_f64(v + i);
    acc = vfmaq_f64(acc, x, x);
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += v[i] * v[i];
  return s;
}

void scale_neon(double* v, std::size_t n, double c) {
  const float64x2_t vc = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(v + i, vmulq_f64(vld1q_f64(v + i), vc));
  }
  for (; i < n; ++i) v[i] *= c;
}

}  // namespace

const Ops* neon_ops_or_null() {
  static const Ops ops{sparse_dense_dot_neon, sum_squares_neon, scale_neon,
                       "neon"};
  return &ops;
}

}  // namespace minrev::kernels

#else

namespace minrev::kernels {
const Ops* neon_ops_or_null() { return nullptr; }
}  // namespace minrev::kernels

#endif
