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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "minrev/scoring.hpp"

using namespace minrev;

namespace {

ProfileSet synthetic_profiles(std::size_t n_reviews = 300) {
    testfx::SyntheticSpec spec;
    spec.n_reviews = n_reviews;
    Dataset ds = testfx::synthetic_dataset(spec);
    return ProfileSet::build(ds, Strategy::unaltered(), MinimizeContext{});
}

}  // namespace

TEST_CASE("history helpers") {
    testfx::SyntheticSpec spec;
    spec.n_reviews = 200;
    Dataset ds = testfx::synthetic_dataset(spec);

    Histories h = train_histories(ds);
    std::size_t total = 0;
    for (const auto& [user, items] : h) {
        CHECK(std::is_sorted(items.begin(), items.end()));
        CHECK(std::adjacent_find(items.begin(), items.end()) == items.end());
        total += items.size();
    }
    CHECK(total <= ds.size());

    auto pop = item_popularity(ds);
    std::size_t count = 0;
    for (const auto& [item, n] : pop) count += n;
    CHECK(count == ds.size());

    std::vector<std::string> items = unique_items(ds);
    CHECK(std::is_sorted(items.begin(), items.end()));
    CHECK(std::adjacent_find(items.begin(), items.end()) == items.end());
    CHECK(items.size() == pop.size());
}

TEST_CASE("accumulator scores equal the literal pairwise sum") {
    ProfileSet profiles = synthetic_profiles();
    testfx::SyntheticSpec spec;
    spec.n_reviews = 300;
    Dataset ds = testfx::synthetic_dataset(spec);
    Histories histories = train_histories(ds);

    ContentAccumulator accum(profiles);
    std::size_t users_checked = 0;
    for (const auto& [user, history] : histories) {
        if (++users_checked > 12) break;
        accum.set_history(history);
        for (const std::string& item : profiles.items()) {
            double fast = accum.score(item);
            double slow = content_score_literal(profiles, history, item);
            CHECK(std::abs(fast - slow) <=
                  1e-12 * std::max({1.0, std::abs(fast), std::abs(slow)}));
        }
    }
    REQUIRE(users_checked > 1);
}

TEST_CASE("score is additive over disjoint history parts") {
    ProfileSet profiles = synthetic_profiles();
    const auto& items = profiles.items();
    REQUIRE(items.size() >= 8);

    std::vector<std::string> part_a(items.begin(), items.begin() + 3);
    std::vector<std::string> part_b(items.begin() + 3, items.begin() + 7);
    std::vector<std::string> whole(items.begin(), items.begin() + 7);

    for (std::size_t i = 7; i < items.size(); ++i) {
        double a = content_score_literal(profiles, part_a, items[i]);
        double b = content_score_literal(profiles, part_b, items[i]);
        double w = content_score_literal(profiles, whole, items[i]);
        CHECK(w == doctest::Approx(a + b).epsilon(1e-12));
    }
}

TEST_CASE("unknown items and empty histories score zero") {
    ProfileSet profiles = synthetic_profiles();
    std::vector<std::string> history = {profiles.items()[0], "nonexistent"};
    CHECK(content_score_literal(profiles, history, "also-nonexistent") == 0.0);
    CHECK(content_score_literal(profiles, {}, profiles.items()[0]) == 0.0);

    ContentAccumulator accum(profiles);
    accum.set_history(history);
    CHECK(accum.score("also-nonexistent") == 0.0);
    accum.set_history({});
    CHECK(accum.score(profiles.items()[0]) == 0.0);
}

TEST_CASE("switching histories resets accumulator state") {
    ProfileSet profiles = synthetic_profiles();
    const auto& items = profiles.items();
    std::vector<std::string> first(items.begin(), items.begin() + 5);
    std::vector<std::string> second(items.begin() + 5, items.begin() + 9);

    ContentAccumulator reused(profiles);
    reused.set_history(first);
    (void)reused.score(items.back());
    reused.set_history(second);

    ContentAccumulator fresh(profiles);
    fresh.set_history(second);
    for (const std::string& item : items) {
        CHECK(reused.score(item) == fresh.score(item));
    }
}

TEST_CASE("scaling every weight leaves cosine and ranking alone") {
    ProfileSet profiles = synthetic_profiles();
    const auto& ps = profiles.profiles();
    REQUIRE(ps.size() >= 3);

    auto scaled = [](const Profile& p, double c) {
        Profile out = p;
        for (double& w : out.weights) w *= c;
        out.norm = p.norm * c;
        return out;
    };

    for (std::size_t i = 0; i + 1 < std::min<std::size_t>(ps.size(), 10);
         ++i) {
        const Profile& a = ps[i];
        const Profile& b = ps[i + 1];
        double base = cosine(a, b);
        CHECK(base >= 0.0);  // tf-idf weights are nonnegative
        CHECK(base <= 1.0 + 1e-12);
        for (double c : {0.25, 3.0, 1000.0}) {
            CHECK(cosine(scaled(a, c), scaled(b, c)) ==
                  doctest::Approx(base).epsilon(1e-12));
        }
    }
}
