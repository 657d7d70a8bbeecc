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

#include "minrev/profiles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>

#include "minrev/kernels.hpp"
#include "minrev/terms.hpp"

namespace minrev {

double cosine(const Profile& a, const Profile& b) {
    if (a.norm == 0.0 || b.norm == 0.0) return 0.0;
    double dot = 0.0;
    size_t i = 0;
    size_t j = 0;
    while (i < a.term_ids.size() && j < b.term_ids.size()) {
        if (a.term_ids[i] < b.term_ids[j]) {
            ++i;
        } else if (a.term_ids[i] > b.term_ids[j]) {
            ++j;
        } else {
            dot += a.weights[i] * b.weights[j];
            ++i;
            ++j;
        }
    }
    return dot / (a.norm * b.norm);
}

ProfileSet ProfileSet::build(const Dataset& ds, const Strategy& strategy,
                             const MinimizeContext& ctx, unsigned threads) {
    ProfileSet set;

    // Group review indices by item, items in id order.
    std::map<std::string, std::vector<size_t>> by_item;
    for (size_t i = 0; i < ds.reviews.size(); ++i) {
        by_item[ds.reviews[i].item_id].push_back(i);
    }
    set.items_.reserve(by_item.size());
    std::vector<const std::vector<size_t>*> item_reviews;
    item_reviews.reserve(by_item.size());
    for (const auto& [item_id, indices] : by_item) {
        set.items_.push_back(item_id);
        item_reviews.push_back(&indices);
    }

    // Phase one, parallel: per-item term counts, terms sorted so the
    // vocabulary interning order below does not depend on thread timing.
    using Counts = std::vector<std::pair<std::string, std::uint32_t>>;
    std::vector<Counts> item_counts(set.items_.size());
    auto count_item = [&](size_t idx) {
        std::unordered_map<std::string, std::uint32_t> counts;
        for (size_t review_idx : *item_reviews[idx]) {
            const Review& r = ds.reviews[review_idx];
            std::string processed =
                minimize(r.text, strategy, r.review_id, ctx);
            for (std::string& term : preprocess_terms(processed)) {
                ++counts[std::move(term)];
            }
        }
        Counts sorted(counts.begin(), counts.end());
        std::sort(sorted.begin(), sorted.end());
        item_counts[idx] = std::move(sorted);
    };

    if (threads <= 1 || set.items_.size() < 2) {
        for (size_t i = 0; i < set.items_.size(); ++i) count_item(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= item_counts.size()) return;
                count_item(i);
            }
        };
        std::vector<std::thread> pool;
        unsigned n = std::min<unsigned>(
            threads, static_cast<unsigned>(set.items_.size()));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Phase two, sequential: intern vocabulary, document frequencies.
    std::unordered_map<std::string, std::uint32_t> term_ids;
    std::vector<std::uint32_t> df;
    for (const Counts& counts : item_counts) {
        for (const auto& [term, tf] : counts) {
            auto [it, inserted] = term_ids.emplace(
                term, static_cast<std::uint32_t>(set.vocab_.size()));
            if (inserted) {
                set.vocab_.push_back(term);
                df.push_back(0);
            }
            ++df[it->second];
        }
        if (!counts.empty()) ++set.items_with_terms_;
    }

    // Phase three: weights.
    const double n_docs = static_cast<double>(set.items_with_terms_);
    const auto& ops = kernels::active();
    set.profiles_.resize(set.items_.size());
    for (size_t i = 0; i < item_counts.size(); ++i) {
        Profile& p = set.profiles_[i];
        for (const auto& [term, tf] : item_counts[i]) {
            std::uint32_t id = term_ids[term];
            double idf = std::log(n_docs / static_cast<double>(df[id]));
            double w = static_cast<double>(tf) * idf;
            if (w == 0.0) continue;
            p.term_ids.push_back(id);
            p.weights.push_back(w);
        }
        // Terms were interned in first-appearance order, so per-profile ids
        // are not yet sorted.
        std::vector<size_t> order(p.term_ids.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return p.term_ids[a] < p.term_ids[b];
        });
        Profile sorted;
        sorted.term_ids.reserve(order.size());
        sorted.weights.reserve(order.size());
        for (size_t k : order) {
            sorted.term_ids.push_back(p.term_ids[k]);
            sorted.weights.push_back(p.weights[k]);
        }
        sorted.norm =
            std::sqrt(ops.sum_squares(sorted.weights.data(),
                                      sorted.weights.size()));
        p = std::move(sorted);
    }

    for (std::uint32_t i = 0; i < set.items_.size(); ++i) {
        set.index_.emplace(set.items_[i], i);
    }
    return set;
}

const Profile* ProfileSet::find(std::string_view item_id) const {
    std::uint32_t idx = index_of(item_id);
    return idx == kNoItem ? nullptr : &profiles_[idx];
}

std::uint32_t ProfileSet::index_of(std::string_view item_id) const {
    auto it = index_.find(std::string(item_id));
    return it == index_.end() ? kNoItem : it->second;
}

std::string ProfileSet::to_text() const {
    std::string out;
    char buf[64];
    for (size_t i = 0; i < items_.size(); ++i) {
        out += items_[i];
        out.push_back('\t');
        const Profile& p = profiles_[i];
        for (size_t k = 0; k < p.term_ids.size(); ++k) {
            if (k) out.push_back(',');
            out += vocab_[p.term_ids[k]];
            std::snprintf(buf, sizeof(buf), ":%.6f", p.weights[k]);
            out += buf;
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace minrev
