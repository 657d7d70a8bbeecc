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

#include <algorithm>
#include <atomic>
#include <cctype>
#include <stdexcept>

namespace minrev::kernels {

const Ops* avx2_ops_or_null();  // defined in avx2.cpp
const Ops* neon_ops_or_null();  // defined in neon.cpp

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* lookup(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_ops();
    case Isa::Avx2:
      return cpu_has_avx2() ? avx2_ops_or_null() : nullptr;
    case Isa::Neon:
      return neon_ops_or_null();
  }
  return nullptr;
}

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Isa> g_active_isa{Isa::Scalar};

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) { return lookup(isa) != nullptr; }

Isa best_available() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const Ops& ops_for(Isa isa) {
  const Ops* ops = lookup(isa);
  if (!ops) {
    throw std::runtime_error(std::string("kernel ISA not available: ") +
                             isa_name(isa));
  }
  return *ops;
}

void set_active(Isa isa) {
  const Ops& ops = ops_for(isa);
  g_active_isa.store(isa);
  g_active.store(&ops);
}

Isa active_isa() {
  if (!g_active.load()) set_active(best_available());
  return g_active_isa.load();
}

const Ops& active() {
  const Ops* ops = g_active.load();
  if (!ops) {
    set_active(best_available());
    ops = g_active.load();
  }
  return *ops;
}

Isa parse_isa(const std::string& name) {
  std::string low(name);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (low == "auto") return best_available();
  if (low == "scalar") return Isa::Scalar;
  if (low == "avx2") return Isa::Avx2;
  if (low == "neon") return Isa::Neon;
  throw std::runtime_error("unknown kernel ISA '" + name +
                           "' (expected auto, scalar, avx2 or neon)");
}

}  // namespace minrev::kernels
