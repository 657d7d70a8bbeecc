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

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minrev/tokens.hpp"

namespace minrev {

// Assigns a part-of-speech tag to every token of one review.
class Tagger {
public:
    virtual ~Tagger() = default;
    virtual void tag(std::vector<Token>& tokens,
                     std::string_view review_id) const = 0;
};

// Deterministic rule-based tagger. Precedence per token:
//   1. closed-class lookup (pronouns, determiners, prepositions,
//      conjunctions, auxiliaries, function adverbs, number words)
//   2. numeral shapes ("63", "5'5\"", "2nd", "8x10")
//   3. capitalized token not at sentence start -> proper noun
//   4. suffix rules: -ly -> adverb; -ous/-ful/-ive/-able -> adjective;
//      -ing/-ed after a pronoun or auxiliary -> verb (with exception lists)
//   5. open-class lexicon with inflection stripping (-s/-es/-ies,
//      -ed/-ing, -er/-est)
//   6. fallback: noun
class RuleTagger : public Tagger {
public:
    RuleTagger();
    void tag(std::vector<Token>& tokens,
             std::string_view review_id) const override;

    // Single-word lookup used by the inflection stripper and by tests.
    // Returns true and sets `out` when the word (or a stripped base form)
    // is known to the closed or open lexicon.
    bool lookup(std::string_view lower, PosTag& out) const;
};

// Word lists backing RuleTagger, defined in tagger_words.cpp.
struct TaggerLexicon {
    std::unordered_map<std::string, PosTag> closed;
    std::unordered_map<std::string, PosTag> open;
};
const TaggerLexicon& tagger_lexicon();

// Tags loaded from a sidecar file produced by an external tagger. Format:
// one "surface<TAB>tag" line per token, reviews separated by blank lines,
// blocks in dataset order. Tags may use the coarse names, Universal
// Dependencies names, or Penn Treebank names. Tokens without a usable
// sidecar entry fall back to the rule tagger.
class SidecarTagger : public Tagger {
public:
    // `review_ids` lists the reviews in the same order as the file blocks.
    SidecarTagger(const std::string& path,
                  const std::vector<std::string>& review_ids);
    void tag(std::vector<Token>& tokens,
             std::string_view review_id) const override;

    size_t block_count() const { return blocks_.size(); }

private:
    struct Entry {
        std::string surface;
        PosTag tag;
    };
    std::unordered_map<std::string, std::vector<Entry>> blocks_;
    RuleTagger fallback_;
};

}  // namespace minrev
