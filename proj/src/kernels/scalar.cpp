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

namespace minrev::kernels {

namespace {

double sparse_dense_dot_scalar(const std::uint32_t* idx, const double* val,
                               std::size_t n, const double* dense) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += val[i] * dense[idx[i]];
  return acc;
}

double sum_squares_scalar(const double* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i] * v[i];
  return acc;
}

void scale_scalar(double* v, std::size_t n, double c) {
  for (std::size_t i = 0; i < n; ++i) v[i] *= c;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{sparse_dense_dot_scalar, sum_squares_scalar,
                       scale_scalar, "scalar"};
  return ops;
}

}  // namespace minrev::kernels
