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

#include "minrev/tagger.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace minrev {

namespace {

// Words that end in an adjective/adverb suffix but belong to another class.
const std::unordered_set<std::string> kLyNotAdverb = {
    "family", "families", "supply", "supplies", "apply", "applies",
    "reply", "replies", "assembly", "assemblies", "belly", "jelly",
    "bully", "rally", "ally", "tally", "lily", "holly", "dolly", "folly",
    "gully", "monopoly", "italy", "july", "silly", "chilly", "smelly",
    "wobbly", "ugly", "early", "daily", "weekly", "monthly", "yearly",
};

const std::unordered_set<std::string> kFulNotAdjective = {
    "handful", "handfuls", "spoonful", "spoonfuls", "armful", "mouthful",
    "cupful", "teaspoonful", "tablespoonful",
};

const std::unordered_set<std::string> kIveNotAdjective = {
    "arrive", "arrives", "derive", "derives", "revive", "revives",
    "survive", "survives", "forgive", "receive", "receives",
};

const std::unordered_set<std::string> kAbleNotAdjective = {
    "vegetable", "vegetables", "timetable", "turntable", "constable",
};

const std::unordered_set<std::string> kOusNotAdjective = {
    "bonus",
};

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }

bool is_cons_char(char c) {
    return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' &&
           c != 'o' && c != 'u';
}

// "bigg" -> "big", "runn" -> "run"; empty result when not doubled.
std::string undouble(const std::string& s) {
    size_t n = s.size();
    if (n >= 3 && s[n - 1] == s[n - 2] && is_cons_char(s[n - 1])) {
        return s.substr(0, n - 1);
    }
    return {};
}

// "carri" -> "carry", "happi" -> "happy".
std::string restore_y(const std::string& s) {
    if (!s.empty() && s.back() == 'i') return s.substr(0, s.size() - 1) + "y";
    return {};
}

bool suffix_tag(const std::string& lower, bool after_pronoun_or_aux,
                PosTag& out) {
    size_t n = lower.size();
    if (n >= 5 && ends_with(lower, "ly") && !kLyNotAdverb.count(lower)) {
        out = PosTag::Adverb;
        return true;
    }
    if (n >= 5 && ends_with(lower, "ous") && !kOusNotAdjective.count(lower)) {
        out = PosTag::Adjective;
        return true;
    }
    if (n >= 5 && ends_with(lower, "ful") && !kFulNotAdjective.count(lower)) {
        out = PosTag::Adjective;
        return true;
    }
    if (n >= 6 && ends_with(lower, "ive") && !kIveNotAdjective.count(lower)) {
        out = PosTag::Adjective;
        return true;
    }
    if (n >= 6 && ends_with(lower, "able") &&
        !kAbleNotAdjective.count(lower)) {
        out = PosTag::Adjective;
        return true;
    }
    if (after_pronoun_or_aux) {
        if ((n >= 6 && ends_with(lower, "ing")) ||
            (n >= 4 && ends_with(lower, "ed"))) {
            out = PosTag::Verb;
            return true;
        }
    }
    return false;
}

bool open_find(const std::string& word, PosTag& out) {
    const auto& open = tagger_lexicon().open;
    auto it = open.find(word);
    if (it == open.end()) return false;
    out = it->second;
    return true;
}

bool open_find_as(const std::string& word, PosTag want, PosTag& out) {
    PosTag t;
    if (open_find(word, t) && t == want) {
        out = t;
        return true;
    }
    return false;
}

}  // namespace

RuleTagger::RuleTagger() {
    tagger_lexicon();  // force table construction, validates the word lists
}

bool RuleTagger::lookup(std::string_view lower_sv, PosTag& out) const {
    const std::string lower(lower_sv);
    const auto& lex = tagger_lexicon();
    auto it = lex.closed.find(lower);
    if (it != lex.closed.end()) {
        out = it->second;
        return true;
    }
    if (open_find(lower, out)) return true;

    size_t n = lower.size();
    // Plurals and third-person -s.
    if (n >= 4 && ends_with(lower, "ies")) {
        if (open_find(lower.substr(0, n - 3) + "y", out)) return true;
    }
    if (n >= 4 && ends_with(lower, "es")) {
        if (open_find(lower.substr(0, n - 2), out)) return true;
    }
    if (n >= 3 && lower.back() == 's' && !ends_with(lower, "ss")) {
        if (open_find(lower.substr(0, n - 1), out)) return true;
    }
    // Past and gerund forms of known verbs.
    if (n >= 4 && ends_with(lower, "ed")) {
        std::string base = lower.substr(0, n - 2);
        if (open_find_as(base, PosTag::Verb, out)) return true;
        if (open_find_as(base + "e", PosTag::Verb, out)) return true;
        std::string u = undouble(base);
        if (!u.empty() && open_find_as(u, PosTag::Verb, out)) return true;
        std::string y = restore_y(base);
        if (!y.empty() && open_find_as(y, PosTag::Verb, out)) return true;
    }
    if (n >= 5 && ends_with(lower, "ing")) {
        std::string base = lower.substr(0, n - 3);
        if (open_find_as(base, PosTag::Verb, out)) return true;
        if (open_find_as(base + "e", PosTag::Verb, out)) return true;
        std::string u = undouble(base);
        if (!u.empty() && open_find_as(u, PosTag::Verb, out)) return true;
    }
    // Comparative and superlative forms of known adjectives.
    for (std::string_view suf : {std::string_view("est"), std::string_view("er")}) {
        if (n >= suf.size() + 2 && ends_with(lower, suf)) {
            std::string base = lower.substr(0, n - suf.size());
            if (open_find_as(base, PosTag::Adjective, out)) return true;
            if (open_find_as(base + "e", PosTag::Adjective, out)) return true;
            std::string u = undouble(base);
            if (!u.empty() && open_find_as(u, PosTag::Adjective, out))
                return true;
            std::string y = restore_y(base);
            if (!y.empty() && open_find_as(y, PosTag::Adjective, out))
                return true;
        }
    }
    return false;
}

void RuleTagger::tag(std::vector<Token>& tokens,
                     std::string_view /*review_id*/) const {
    const auto& lex = tagger_lexicon();
    bool sentence_start = true;
    PosTag prev_tag = PosTag::Punct;
    std::string prev_lower;

    for (Token& tok : tokens) {
        if (is_punct_surface(tok.surface)) {
            tok.tag = PosTag::Punct;
            if (tok.surface.find_first_of(".!?") != std::string::npos) {
                sentence_start = true;
            }
            prev_tag = PosTag::Punct;
            prev_lower.clear();
            continue;
        }

        const std::string lower = lowercase(tok.surface);
        PosTag t;
        auto closed_it = lex.closed.find(lower);
        bool prev_is_aux = false;
        if (prev_tag == PosTag::Verb && !prev_lower.empty()) {
            auto pit = lex.closed.find(prev_lower);
            prev_is_aux = pit != lex.closed.end() &&
                          pit->second == PosTag::Verb;
        }

        if (closed_it != lex.closed.end()) {
            t = closed_it->second;
        } else if (is_numeral(tok.surface)) {
            t = PosTag::Numeral;
        } else if (!sentence_start && is_ascii_upper(tok.surface[0])) {
            t = PosTag::ProperNoun;
        } else if (suffix_tag(lower,
                              prev_tag == PosTag::Pronoun || prev_is_aux,
                              t)) {
            // tagged by suffix rule
        } else if (lookup(lower, t)) {
            // tagged by open-class lexicon
        } else {
            t = PosTag::Noun;
        }

        tok.tag = t;
        prev_tag = t;
        prev_lower = lower;
        sentence_start = false;
    }
}

SidecarTagger::SidecarTagger(const std::string& path,
                             const std::vector<std::string>& review_ids) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open tagger sidecar file: " + path);
    }

    std::vector<std::vector<Entry>> parsed;
    std::vector<Entry> current;
    std::string line;
    size_t line_no = 0;
    bool in_block = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (in_block) {
                parsed.push_back(std::move(current));
                current.clear();
                in_block = false;
            }
            continue;
        }
        in_block = true;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error("tagger sidecar line " +
                                     std::to_string(line_no) +
                                     ": expected surface<TAB>tag");
        }
        Entry e;
        e.surface = line.substr(0, tab);
        std::string tag_str = line.substr(tab + 1);
        try {
            e.tag = parse_tag(tag_str);
        } catch (const std::exception&) {
            throw std::runtime_error("tagger sidecar line " +
                                     std::to_string(line_no) +
                                     ": unknown tag '" + tag_str + "'");
        }
        current.push_back(std::move(e));
    }
    if (in_block) parsed.push_back(std::move(current));

    if (parsed.size() > review_ids.size()) {
        throw std::runtime_error(
            "tagger sidecar has " + std::to_string(parsed.size()) +
            " blocks but the dataset has only " +
            std::to_string(review_ids.size()) + " reviews");
    }
    for (size_t i = 0; i < parsed.size(); ++i) {
        blocks_.emplace(review_ids[i], std::move(parsed[i]));
    }
}

void SidecarTagger::tag(std::vector<Token>& tokens,
                        std::string_view review_id) const {
    auto it = blocks_.find(std::string(review_id));
    if (it == blocks_.end()) {
        fallback_.tag(tokens, review_id);
        return;
    }
    const std::vector<Entry>& entries = it->second;

    if (entries.size() == tokens.size()) {
        for (size_t i = 0; i < tokens.size(); ++i) {
            tokens[i].tag = entries[i].tag;
        }
        return;
    }

    // Token counts differ (the external tagger split text differently).
    // Align by surface with a small look-ahead window; unmatched tokens
    // keep the rule-based tag.
    fallback_.tag(tokens, review_id);
    size_t j = 0;
    for (Token& tok : tokens) {
        size_t limit = std::min(entries.size(), j + 4);
        for (size_t k = j; k < limit; ++k) {
            if (entries[k].surface == tok.surface) {
                tok.tag = entries[k].tag;
                j = k + 1;
                break;
            }
        }
    }
}

}  // namespace minrev
