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

// Compiled with -mavx2 -mfma on x86_64 only; dispatch guards execution.

#include "minrev/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace minrev::kernels {

namespace {

double sparse_dense_dot_avx2(const std::uint32_t* idx, const double* val,
                             std::size_t n, const double* dense) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    __m256d g = _mm256_i32gather_pd(dense, vi, 8);
    __m256d v = _mm256_loadu_pd(val + i);
    acc = _mm256_fmadd_pd(v, g, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += val[i] * dense[idx[i]];
  return s;
}

double sum_squares_avx2(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(v + i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += v[i] * v[i];
  return s;
}

void scale_avx2(double* v, std::size_t n, double c) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(v + i, _mm256_mul_pd(_mm256_loadu_pd(v + i), vc));
  }
  for (; i < n; ++i) v[i] *= c;
}

}  // namespace

const Ops* avx2_ops_or_null() {
  static const Ops ops{sparse_dense_dot_avx2, sum_squares_avx2, scale_avx2,
                       "avx2"};
  return &ops;
}

}  // namespace minrev::kernels

#else

namespace minrev::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
}  // namespace minrev::kernels

#endif
