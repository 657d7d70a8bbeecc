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

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minrev/corpus.hpp"
#include "minrev/profiles.hpp"

namespace minrev {

// user id -> the items the user interacted with, sorted and unique.
using Histories = std::unordered_map<std::string, std::vector<std::string>>;
Histories train_histories(const Dataset& train);

// item id -> number of interactions.
std::unordered_map<std::string, std::uint32_t> item_popularity(
    const Dataset& train);

// Sorted unique item ids.
std::vector<std::string> unique_items(const Dataset& ds);

// score(u, i) = sum over j in the user's history of cosine(i, j),
// computed pair by pair. Reference implementation; the accumulator below
// must agree with it to high precision.
double content_score_literal(const ProfileSet& profiles,
                             const std::vector<std::string>& history,
                             std::string_view item_id);

// Same score via a dense accumulator: the history's unit-normalized
// profiles are summed once, then each candidate costs one sparse-dense
// dot. One instance per thread; set_history resets state between users.
class ContentAccumulator {
public:
    explicit ContentAccumulator(const ProfileSet& profiles);

    void set_history(const std::vector<std::string>& history);
    double score(std::string_view item_id) const;
    std::size_t vocabulary_size() const { return accum_.size(); }

private:
    const ProfileSet& profiles_;
    std::vector<double> accum_;           // vocabulary-sized
    std::vector<std::uint32_t> touched_;  // entries to clear on reset
};

}  // namespace minrev
