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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace minrev::kernels {

// Arithmetic inner loops used by profile normalization and Eq-style scoring.
// Scalar implementations are the reference; vector variants must match them
// within a few ulps (see tests/test_kernels.cpp).
struct Ops {
  // sum_k val[k] * dense[idx[k]]
  double (*sparse_dense_dot)(const std::uint32_t* idx, const double* val,
                             std::size_t n, const double* dense);
  // sum_k v[k]^2
  double (*sum_squares)(const double* v, std::size_t n);
  // v[k] *= c
  void (*scale)(double* v, std::size_t n, double c);
  const char* name;
};

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa best_available();

const Ops& ops_for(Isa isa);  // throws std::runtime_error if unavailable
const Ops& scalar_ops();

// Process-wide selection. Defaults to best_available() on first use.
void set_active(Isa isa);  // throws std::runtime_error if unavailable
Isa active_isa();
const Ops& active();

// Parses "auto", "scalar", "avx2", "neon" (case-insensitive).
// Returns best_available() for "auto"; throws std::runtime_error otherwise
// on unknown names.
Isa parse_isa(const std::string& name);

}  // namespace minrev::kernels
