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

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minrev/kernels.hpp"
#include "minrev/rng.hpp"

using namespace minrev;

namespace {

struct Vectors {
    std::vector<std::uint32_t> idx;
    std::vector<double> val;
    std::vector<double> dense;
};

Vectors random_vectors(rng::SplitMix64& s, std::size_t n,
                       std::size_t dense_size) {
    Vectors v;
    v.dense.resize(dense_size);
    for (double& d : v.dense) d = s.next_unit() * 2.0 - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        v.idx.push_back(static_cast<std::uint32_t>(
            dense_size ? s.bounded(dense_size) : 0));
        v.val.push_back(s.next_unit() * 4.0 - 2.0);
    }
    return v;
}

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("every available isa agrees with scalar") {
    const kernels::Ops& ref = kernels::scalar_ops();
    std::vector<kernels::Isa> isas = {kernels::Isa::Avx2, kernels::Isa::Neon};

    rng::SplitMix64 s(2024);
    for (kernels::Isa isa : isas) {
        if (!kernels::isa_available(isa)) continue;
        const kernels::Ops& ops = kernels::ops_for(isa);
        INFO("isa ", ops.name);
        for (std::size_t n = 0; n <= 40; ++n) {
            for (int trial = 0; trial < 25; ++trial) {
                Vectors v = random_vectors(s, n, 64);
                double got =
                    ops.sparse_dense_dot(v.idx.data(), v.val.data(), n,
                                         v.dense.data());
                double want =
                    ref.sparse_dense_dot(v.idx.data(), v.val.data(), n,
                                         v.dense.data());
                CHECK(close(got, want));

                CHECK(close(ops.sum_squares(v.val.data(), n),
                            ref.sum_squares(v.val.data(), n)));

                std::vector<double> a = v.val, b = v.val;
                ops.scale(a.data(), n, 0.37);
                ref.scale(b.data(), n, 0.37);
                for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
            }
        }
        // larger sizes cross the vector-width remainder handling
        for (std::size_t n : {127, 128, 129, 1000}) {
            Vectors v = random_vectors(s, n, 512);
            CHECK(close(ops.sparse_dense_dot(v.idx.data(), v.val.data(), n,
                                             v.dense.data()),
                        ref.sparse_dense_dot(v.idx.data(), v.val.data(), n,
                                             v.dense.data())));
            CHECK(close(ops.sum_squares(v.val.data(), n),
                        ref.sum_squares(v.val.data(), n)));
        }
    }
}

TEST_CASE("scalar kernels compute the obvious sums") {
    const kernels::Ops& ops = kernels::scalar_ops();
    std::vector<std::uint32_t> idx = {3, 0, 2};
    std::vector<double> val = {2.0, -1.0, 0.5};
    std::vector<double> dense = {10.0, 20.0, 30.0, 40.0};
    CHECK(ops.sparse_dense_dot(idx.data(), val.data(), 3, dense.data()) ==
          doctest::Approx(2.0 * 40.0 - 10.0 + 0.5 * 30.0));
    CHECK(ops.sum_squares(val.data(), 3) == doctest::Approx(5.25));
    CHECK(ops.sparse_dense_dot(idx.data(), val.data(), 0, dense.data()) == 0.0);
    CHECK(ops.sum_squares(val.data(), 0) == 0.0);
}

TEST_CASE("isa parsing and selection") {
    CHECK(kernels::parse_isa("scalar") == kernels::Isa::Scalar);
    CHECK(kernels::parse_isa("SCALAR") == kernels::Isa::Scalar);
    CHECK(kernels::parse_isa("auto") == kernels::best_available());
    CHECK_THROWS_AS((void)kernels::parse_isa("sse9"), std::runtime_error);
    CHECK(kernels::isa_available(kernels::Isa::Scalar));

    kernels::Isa before = kernels::active_isa();
    kernels::set_active(kernels::Isa::Scalar);
    CHECK(kernels::active_isa() == kernels::Isa::Scalar);
    kernels::set_active(before);
}
