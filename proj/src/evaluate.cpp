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

#include "minrev/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "minrev/rng.hpp"

namespace minrev {

EvalCaseSet build_cases(const std::vector<std::string>& catalog,
                        const Histories& histories, const Dataset& test,
                        const EvalOptions& options) {
    if (!std::is_sorted(catalog.begin(), catalog.end())) {
        throw std::runtime_error("candidate catalog must be sorted");
    }
    EvalCaseSet out;
    const std::vector<std::string> no_history;
    auto in_catalog = [&](const std::string& item) {
        return std::binary_search(catalog.begin(), catalog.end(), item);
    };

    for (const Review& r : test.reviews) {
        auto hist_it = histories.find(r.user_id);
        const std::vector<std::string>& history =
            hist_it == histories.end() ? no_history : hist_it->second;
        if (options.skip_cold_users && history.empty()) {
            ++out.skipped;
            continue;
        }

        // Effective pool = catalog minus training items minus the target.
        // Draws reject excluded items instead of materializing the pool.
        size_t excluded = 0;
        for (const std::string& item : history) {
            if (in_catalog(item)) ++excluded;
        }
        const bool target_in_history =
            std::binary_search(history.begin(), history.end(), r.item_id);
        if (in_catalog(r.item_id) && !target_in_history) ++excluded;
        if (catalog.size() - excluded < options.k) {
            ++out.skipped;
            continue;
        }

        EvalCase c;
        c.user_id = r.user_id;
        c.target_item = r.item_id;
        c.seed = rng::hash_seed_str2(options.seed, r.user_id, r.item_id);
        rng::SplitMix64 stream(c.seed);

        std::unordered_set<std::uint32_t> chosen;
        chosen.reserve(options.k * 2);
        c.candidates.reserve(options.k);
        while (c.candidates.size() < options.k) {
            std::uint32_t pick =
                static_cast<std::uint32_t>(stream.bounded(catalog.size()));
            const std::string& item = catalog[pick];
            if (item == r.item_id) continue;
            if (std::binary_search(history.begin(), history.end(), item)) {
                continue;
            }
            if (!chosen.insert(pick).second) continue;
            c.candidates.push_back(item);
        }
        out.cases.push_back(std::move(c));
    }
    return out;
}

void ContentScorer::score_case(const EvalCase&,
                               const std::vector<std::string>& history,
                               const std::vector<std::string>& items,
                               std::vector<double>& scores) const {
    thread_local std::unique_ptr<ContentAccumulator> accum;
    thread_local const ProfileSet* accum_source = nullptr;
    // The address check alone is not enough: a new profile set can reuse
    // a freed one's address, so compare the vocabulary size as well.
    if (!accum || accum_source != &profiles_ ||
        accum->vocabulary_size() != profiles_.vocabulary().size()) {
        accum = std::make_unique<ContentAccumulator>(profiles_);
        accum_source = &profiles_;
    }
    accum->set_history(history);
    scores.resize(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        scores[i] = accum->score(items[i]);
    }
}

void MostPopScorer::score_case(const EvalCase&,
                               const std::vector<std::string>& /*history*/,
                               const std::vector<std::string>& items,
                               std::vector<double>& scores) const {
    scores.resize(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        auto it = popularity_.find(items[i]);
        scores[i] = it == popularity_.end() ? 0.0
                                            : static_cast<double>(it->second);
    }
}

void RandomScorer::score_case(const EvalCase& c,
                              const std::vector<std::string>& /*history*/,
                              const std::vector<std::string>& items,
                              std::vector<double>& scores) const {
    scores.resize(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        std::uint64_t h =
            rng::Hasher().u64(seed_).u64(c.seed).str(items[i]).value();
        scores[i] = rng::unit_from_hash(h);
    }
}

std::size_t rank_of_target(const std::vector<std::string>& items,
                           const std::vector<double>& scores,
                           std::size_t target_index) {
    const double target_score = scores[target_index];
    const std::string& target_id = items[target_index];
    std::size_t rank = 1;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i == target_index) continue;
        if (scores[i] > target_score ||
            (scores[i] == target_score && items[i] < target_id)) {
            ++rank;
        }
    }
    return rank;
}

EvalResult evaluate(const Scorer& scorer, const EvalCaseSet& case_set,
                    const Histories& histories, const EvalOptions& options) {
    const std::vector<EvalCase>& cases = case_set.cases;
    if (cases.empty()) {
        throw std::runtime_error("no evaluation cases");
    }

    std::vector<std::size_t> ranks(cases.size(), 0);
    const std::vector<std::string> no_history;

    auto run_case = [&](size_t idx) {
        const EvalCase& c = cases[idx];
        auto hist_it = histories.find(c.user_id);
        const std::vector<std::string>& history =
            hist_it == histories.end() ? no_history : hist_it->second;

        std::vector<std::string> items = c.candidates;
        items.push_back(c.target_item);
        std::vector<double> scores;
        scorer.score_case(c, history, items, scores);
        ranks[idx] = rank_of_target(items, scores, items.size() - 1);
    };

    if (options.threads <= 1 || cases.size() < 2) {
        for (size_t i = 0; i < cases.size(); ++i) run_case(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                run_case(i);
            }
        };
        unsigned n = std::min<unsigned>(options.threads,
                                        static_cast<unsigned>(cases.size()));
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    EvalResult result;
    result.n_cases = cases.size();
    result.skipped = case_set.skipped;

    // std::map keeps the per-user reduction order deterministic.
    std::map<std::string, bool> user_hit;
    double mrr_sum = 0.0;
    double recall_sum = 0.0;
    for (size_t i = 0; i < cases.size(); ++i) {
        const std::size_t rank = ranks[i];
        const bool hit = rank <= options.cutoff;
        if (hit) recall_sum += 1.0;
        if (options.mrr_full_ranking || hit) {
            mrr_sum += 1.0 / static_cast<double>(rank);
        }
        auto [it, inserted] = user_hit.emplace(cases[i].user_id, hit);
        if (!inserted) it->second = it->second || hit;
    }

    result.mrr = mrr_sum / static_cast<double>(cases.size());
    result.recall = recall_sum / static_cast<double>(cases.size());
    result.n_users = user_hit.size();
    double hits = 0.0;
    for (const auto& [user, hit] : user_hit) {
        if (hit) hits += 1.0;
    }
    result.hit_rate = hits / static_cast<double>(user_hit.size());
    return result;
}

}  // namespace minrev
