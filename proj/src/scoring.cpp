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

#include "minrev/scoring.hpp"

#include <algorithm>

#include "minrev/kernels.hpp"

namespace minrev {

Histories train_histories(const Dataset& train) {
    Histories histories;
    for (const Review& r : train.reviews) {
        histories[r.user_id].push_back(r.item_id);
    }
    for (auto& [user, items] : histories) {
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
    }
    return histories;
}

std::unordered_map<std::string, std::uint32_t> item_popularity(
    const Dataset& train) {
    std::unordered_map<std::string, std::uint32_t> counts;
    for (const Review& r : train.reviews) {
        ++counts[r.item_id];
    }
    return counts;
}

std::vector<std::string> unique_items(const Dataset& ds) {
    std::vector<std::string> items;
    items.reserve(ds.reviews.size());
    for (const Review& r : ds.reviews) {
        items.push_back(r.item_id);
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

double content_score_literal(const ProfileSet& profiles,
                             const std::vector<std::string>& history,
                             std::string_view item_id) {
    const Profile* candidate = profiles.find(item_id);
    if (!candidate) return 0.0;
    double score = 0.0;
    for (const std::string& owned : history) {
        const Profile* p = profiles.find(owned);
        if (p) score += cosine(*candidate, *p);
    }
    return score;
}

ContentAccumulator::ContentAccumulator(const ProfileSet& profiles)
    : profiles_(profiles), accum_(profiles.vocabulary().size(), 0.0) {}

void ContentAccumulator::set_history(const std::vector<std::string>& history) {
    for (std::uint32_t id : touched_) accum_[id] = 0.0;
    touched_.clear();

    for (const std::string& item : history) {
        const Profile* p = profiles_.find(item);
        if (!p || p->norm == 0.0) continue;
        const double inv = 1.0 / p->norm;
        for (size_t k = 0; k < p->term_ids.size(); ++k) {
            std::uint32_t id = p->term_ids[k];
            // tf-idf weights are nonnegative, so zero means untouched.
            if (accum_[id] == 0.0) touched_.push_back(id);
            accum_[id] += p->weights[k] * inv;
        }
    }
}

double ContentAccumulator::score(std::string_view item_id) const {
    const Profile* p = profiles_.find(item_id);
    if (!p || p->norm == 0.0) return 0.0;
    double dot = kernels::active().sparse_dense_dot(
        p->term_ids.data(), p->weights.data(), p->term_ids.size(),
        accum_.data());
    return dot / p->norm;
}

}  // namespace minrev
