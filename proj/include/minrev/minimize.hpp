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
#include "minrev/lexicon.hpp"
#include "minrev/tagger.hpp"
#include "minrev/tokens.hpp"

namespace minrev {

enum class StrategyKind {
    Unaltered,  // text passes through untouched
    WordType,   // drop tokens whose tag is in `tags`
    Random,     // drop each word independently with `probability`
    KeepOnly,   // keep only tokens whose tag is in `tags`
    Masking,    // replace sensitive phrases with placeholders
};

struct Strategy {
    StrategyKind kind = StrategyKind::Unaltered;
    // WordType: tags to remove. KeepOnly: tags to keep.
    std::vector<PosTag> tags;
    double probability = 0.5;  // Random only

    // Canonical name used in reports ("wordtype", "random:0.5", ...).
    std::string name() const;

    static Strategy unaltered();
    // Default removal set: nouns, proper nouns, pronouns, verbs, numerals
    // (adjectives and adverbs survive).
    static Strategy wordtype();
    static Strategy wordtype(std::vector<PosTag> remove);
    static Strategy random(double probability);
    static Strategy keep_only(std::vector<PosTag> keep);
    static Strategy masking();
};

// Accepts "unaltered", "wordtype", "wordtype:NOUN+VERB", "random",
// "random:0.7", "keeponly:ADJ+ADV", "masking". Throws std::runtime_error
// with the list of valid names on anything else.
Strategy parse_strategy(std::string_view text);

struct MinimizeContext {
    const Tagger* tagger = nullptr;            // WordType, KeepOnly, Masking
    const SensitiveLexicon* lexicon = nullptr; // Masking
    uint64_t seed = 42;                        // Random
};

// Applies a strategy to one review's tokens. Removal strategies also drop
// punctuation tokens. Random removal draws from a stream derived from
// (seed, review_id), so results do not depend on processing order.
std::vector<Token> minimize_tokens(std::vector<Token> tokens,
                                   const Strategy& strategy,
                                   std::string_view review_id,
                                   const MinimizeContext& ctx);

// String form. Unaltered returns the input bytes unchanged; Masking splices
// placeholders into the original text; the removal strategies join the
// surviving tokens with single spaces.
std::string minimize(std::string_view text, const Strategy& strategy,
                     std::string_view review_id, const MinimizeContext& ctx);

// Fraction of words (non-punctuation tokens) removed across a dataset:
// 1 - words_after / words_before. Returns 0 on a wordless dataset.
double removal_fraction(const Dataset& ds, const Strategy& strategy,
                        const MinimizeContext& ctx);

}  // namespace minrev
