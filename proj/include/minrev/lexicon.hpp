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
#include <vector>

#include "minrev/tokens.hpp"

namespace minrev {

// Dictionary of sensitive phrases, grouped into categories that share a
// replacement placeholder. File format:
//
//   [Age] replacement="[AGE]"
//   NN year old
//   NN years old
//
//   [Gender] replacement="[PERSON]"
//   woman
//   man
//
// One pattern per line; lines starting with # are comments. Matching is
// case-insensitive on token surfaces and the literal word NN matches any
// numeral token ("63", "5'5\"", "sixty").
class SensitiveLexicon {
public:
    struct PatternWord {
        std::string word;  // lowercased literal; empty when numeral wildcard
        bool numeral = false;
    };
    struct Category {
        std::string name;
        std::string replacement;
        std::vector<std::vector<PatternWord>> patterns;  // longest first
    };

    static SensitiveLexicon from_file(const std::string& path);
    static SensitiveLexicon from_string(std::string_view text);
    // The list shipped with the library (age, gender, medical, physical,
    // marital categories). data/default_lexicon.txt holds the same content.
    static SensitiveLexicon builtin();

    // Longest match wins; ties go to the category listed first. Each
    // matched span becomes a single placeholder token. Unmatched tokens
    // are returned unchanged. Running the result through mask() again is
    // a no-op.
    std::vector<Token> mask(const std::vector<Token>& tokens) const;

    // Replaces matched spans inside the original text using token byte
    // offsets, leaving all other bytes exactly as they were.
    std::string mask_text(std::string_view text,
                          const std::vector<Token>& tokens) const;

    const std::vector<Category>& categories() const { return categories_; }

private:
    struct Match {
        size_t begin = 0;  // token index
        size_t length = 0;
        const Category* category = nullptr;
    };
    // Longest match over all categories starting at token index i.
    bool match_at(const std::vector<Token>& tokens, size_t i,
                  Match& out) const;

    std::vector<Category> categories_;
};

}  // namespace minrev
