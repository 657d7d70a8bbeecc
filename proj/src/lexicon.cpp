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

#include "minrev/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minrev {

namespace {

const char kBuiltinLexicon[] = R"([Age] replacement="[AGE]"
NN year old
NN years old
NN yr old
NN yrs old
NN year-old
NN years of age
age NN
aged NN
turning NN
turned NN

[Gender] replacement="[PERSON]"
woman
women
man
men
lady
ladies
gentleman
gentlemen
girl
girls
boy
boys
female
male

[Medical] replacement="[MEDICAL]"
arthritic hands
arthritis
arthritic
diabetes
diabetic
asthma
asthmatic
allergies
allergy
allergic
surgery
surgeries
chronic pain
blood pressure
cholesterol
migraine
migraines
insomnia
depression
anxiety
cancer
tumor
stroke
fibromyalgia
eczema
psoriasis
acne
disability
disabled
wheelchair
pregnancy
pregnant

[Physical] replacement="[PHYSICAL]"
i am NN
i'm NN
NN pounds
NN lbs
NN lb
NN kg
NN kilos
NN feet tall
NN foot tall
NN tall
weigh NN
weighs NN
my height
my weight
overweight
obese

[Marital] replacement="[FAMILY-MEMBER]"
husband
husbands
wife
wives
spouse
boyfriend
girlfriend
fiance
fiancee
married
divorced
widowed
widow
widower
son
sons
daughter
daughters
grandson
granddaughter
grandchildren
grandkids
mother-in-law
father-in-law
my mom
my dad
my mother
my father
my sister
my brother
my aunt
my uncle
my niece
my nephew
my cousin
my kids
my children
my child
my baby
my grandma
my grandpa
my grandmother
my grandfather
my family
)";

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<SensitiveLexicon::PatternWord> parse_pattern(
    const std::string& line, size_t line_no) {
    std::vector<SensitiveLexicon::PatternWord> words;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) {
        SensitiveLexicon::PatternWord pw;
        if (w == "NN") {
            pw.numeral = true;
        } else {
            pw.word = lowercase(w);
        }
        words.push_back(std::move(pw));
    }
    if (words.empty()) {
        throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                                 ": empty pattern");
    }
    return words;
}

bool word_matches(const SensitiveLexicon::PatternWord& pw, const Token& tok) {
    if (pw.numeral) {
        return tok.tag == PosTag::Numeral || is_numeral(tok.surface);
    }
    return lowercase(tok.surface) == pw.word;
}

}  // namespace

SensitiveLexicon SensitiveLexicon::from_string(std::string_view text) {
    SensitiveLexicon lex;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            size_t close = line.find(']');
            size_t eq = line.find("replacement=\"");
            size_t last_quote = line.rfind('"');
            if (close == std::string::npos || eq == std::string::npos ||
                last_quote == std::string::npos ||
                last_quote <= eq + 13 - 1) {
                throw std::runtime_error(
                    "lexicon line " + std::to_string(line_no) +
                    ": expected [Category] replacement=\"...\"");
            }
            Category cat;
            cat.name = line.substr(1, close - 1);
            cat.replacement = line.substr(eq + 13, last_quote - (eq + 13));
            lex.categories_.push_back(std::move(cat));
        } else {
            if (lex.categories_.empty()) {
                throw std::runtime_error(
                    "lexicon line " + std::to_string(line_no) +
                    ": pattern before any [Category] header");
            }
            lex.categories_.back().patterns.push_back(
                parse_pattern(line, line_no));
        }
    }
    for (Category& cat : lex.categories_) {
        std::stable_sort(cat.patterns.begin(), cat.patterns.end(),
                         [](const auto& a, const auto& b) {
                             return a.size() > b.size();
                         });
    }
    return lex;
}

SensitiveLexicon SensitiveLexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open lexicon file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

SensitiveLexicon SensitiveLexicon::builtin() {
    return from_string(kBuiltinLexicon);
}

bool SensitiveLexicon::match_at(const std::vector<Token>& tokens, size_t i,
                                Match& out) const {
    out = Match{};
    for (const Category& cat : categories_) {
        for (const auto& pattern : cat.patterns) {
            if (pattern.size() <= out.length) break;  // sorted longest first
            if (i + pattern.size() > tokens.size()) continue;
            bool ok = true;
            for (size_t j = 0; j < pattern.size(); ++j) {
                if (!word_matches(pattern[j], tokens[i + j])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.begin = i;
                out.length = pattern.size();
                out.category = &cat;
                break;  // longer patterns in this category already tried
            }
        }
    }
    return out.category != nullptr;
}

std::vector<Token> SensitiveLexicon::mask(
    const std::vector<Token>& tokens) const {
    std::vector<Token> result;
    result.reserve(tokens.size());
    size_t i = 0;
    while (i < tokens.size()) {
        Match m;
        if (match_at(tokens, i, m)) {
            Token placeholder;
            placeholder.surface = m.category->replacement;
            placeholder.start = tokens[i].start;
            placeholder.end = tokens[i + m.length - 1].end;
            placeholder.tag = PosTag::Other;
            result.push_back(std::move(placeholder));
            i += m.length;
        } else {
            result.push_back(tokens[i]);
            ++i;
        }
    }
    return result;
}

std::string SensitiveLexicon::mask_text(
    std::string_view text, const std::vector<Token>& tokens) const {
    std::string result;
    result.reserve(text.size());
    size_t cursor = 0;
    size_t i = 0;
    while (i < tokens.size()) {
        Match m;
        if (match_at(tokens, i, m)) {
            size_t span_start = tokens[i].start;
            size_t span_end = tokens[i + m.length - 1].end;
            result.append(text.substr(cursor, span_start - cursor));
            result.append(m.category->replacement);
            cursor = span_end;
            i += m.length;
        } else {
            ++i;
        }
    }
    result.append(text.substr(cursor));
    return result;
}

}  // namespace minrev
