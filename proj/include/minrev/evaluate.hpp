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
#include <vector>

#include "minrev/corpus.hpp"
#include "minrev/profiles.hpp"
#include "minrev/scoring.hpp"

namespace minrev {

// One held-out interaction plus K random candidate items the user has
// not interacted with. The scorer ranks the K+1 items together.
struct EvalCase {
    std::string user_id;
    std::string target_item;
    std::vector<std::string> candidates;  // K items, target not among them
    std::uint64_t seed = 0;               // stream seed used to draw them
};

struct EvalOptions {
    std::size_t k = 100;      // random candidates per case
    std::size_t cutoff = 10;  // N in Recall@N and HitRate@N
    std::uint64_t seed = 42;
    // MRR counts 1/rank only when rank <= cutoff unless this is set.
    bool mrr_full_ranking = false;
    // Drop test interactions whose user has no training history.
    bool skip_cold_users = false;
    unsigned threads = 1;
};

struct EvalCaseSet {
    std::vector<EvalCase> cases;
    std::size_t skipped = 0;  // candidate pool too small or cold user
};

// One case per test review. Candidates are drawn without replacement from
// `catalog` minus the user's training items minus the target, using a
// stream seeded by (seed, user_id, target_item) so the draw does not
// depend on processing order. Cases whose pool is smaller than K are
// counted in `skipped`.
EvalCaseSet build_cases(const std::vector<std::string>& catalog,
                        const Histories& histories, const Dataset& test,
                        const EvalOptions& options);

class Scorer {
public:
    virtual ~Scorer() = default;
    virtual std::string name() const = 0;
    // Fills scores[i] for items[i]. `history` holds the user's training
    // items. Must be safe to call from several threads at once.
    virtual void score_case(const EvalCase& c,
                            const std::vector<std::string>& history,
                            const std::vector<std::string>& items,
                            std::vector<double>& scores) const = 0;
};

// Ranks by tf-idf profile similarity to the user's training items.
class ContentScorer : public Scorer {
public:
    explicit ContentScorer(const ProfileSet& profiles)
        : profiles_(profiles) {}
    std::string name() const override { return "content"; }
    void score_case(const EvalCase& c, const std::vector<std::string>& history,
                    const std::vector<std::string>& items,
                    std::vector<double>& scores) const override;

private:
    const ProfileSet& profiles_;
};

// Ranks by training interaction count, the same order for every user.
class MostPopScorer : public Scorer {
public:
    explicit MostPopScorer(const Dataset& train)
        : popularity_(item_popularity(train)) {}
    std::string name() const override { return "mostpop"; }
    void score_case(const EvalCase& c, const std::vector<std::string>& history,
                    const std::vector<std::string>& items,
                    std::vector<double>& scores) const override;

private:
    std::unordered_map<std::string, std::uint32_t> popularity_;
};

// Scores every (case, item) pair with an independent uniform draw.
// Fully determined by its seed and the case seeds.
class RandomScorer : public Scorer {
public:
    explicit RandomScorer(std::uint64_t seed) : seed_(seed) {}
    std::string name() const override { return "random"; }
    void score_case(const EvalCase& c, const std::vector<std::string>& history,
                    const std::vector<std::string>& items,
                    std::vector<double>& scores) const override;

private:
    std::uint64_t seed_;
};

struct EvalResult {
    double mrr = 0.0;
    double recall = 0.0;    // mean over cases of [rank <= cutoff]
    double hit_rate = 0.0;  // share of users with any case ranked <= cutoff
    std::size_t n_cases = 0;
    std::size_t n_users = 0;
    std::size_t skipped = 0;  // copied from the case set
};

// Rank of the target among candidates + target: 1 plus the number of
// items with a higher score, plus earlier-ordered ties (ties break by
// item id ascending).
std::size_t rank_of_target(const std::vector<std::string>& items,
                           const std::vector<double>& scores,
                           std::size_t target_index);

// Throws std::runtime_error when the case set is empty.
EvalResult evaluate(const Scorer& scorer, const EvalCaseSet& case_set,
                    const Histories& histories, const EvalOptions& options);

}  // namespace minrev
