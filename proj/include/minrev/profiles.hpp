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
#include "minrev/minimize.hpp"

namespace minrev {

// Sparse tf-idf vector for one item, term ids ascending.
struct Profile {
    std::vector<std::uint32_t> term_ids;
    std::vector<double> weights;
    double norm = 0.0;
};

// 0 when either profile has zero norm.
double cosine(const Profile& a, const Profile& b);

// Item profiles over a shared interned vocabulary. A profile aggregates
// the term counts of all reviews of the item (reviews are minimized
// individually first); weight = tf * ln(N / df) where N is the number of
// items whose processed text has at least one term and df the number of
// items containing the term. Zero weights are dropped.
class ProfileSet {
public:
    static ProfileSet build(const Dataset& ds, const Strategy& strategy,
                            const MinimizeContext& ctx, unsigned threads = 1);

    const Profile* find(std::string_view item_id) const;
    // Index into items()/profiles(), or uint32_t(-1) when unknown.
    std::uint32_t index_of(std::string_view item_id) const;

    const std::vector<std::string>& items() const { return items_; }
    const std::vector<Profile>& profiles() const { return profiles_; }
    const std::vector<std::string>& vocabulary() const { return vocab_; }
    std::size_t items_with_terms() const { return items_with_terms_; }

    // One line per item: item_id<TAB>term:weight,term:weight,...
    // Items in id order, terms in vocabulary order, weights with six
    // decimal places.
    std::string to_text() const;

    static constexpr std::uint32_t kNoItem = static_cast<std::uint32_t>(-1);

private:
    std::vector<std::string> items_;  // sorted by item id
    std::vector<Profile> profiles_;   // aligned with items_
    std::vector<std::string> vocab_;  // term id -> term
    std::unordered_map<std::string, std::uint32_t> index_;
    std::size_t items_with_terms_ = 0;
};

}  // namespace minrev
