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

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "minrev/lexicon.hpp"
#include "minrev/tagger.hpp"
#include "minrev/tokens.hpp"

using namespace minrev;

namespace {

std::string mask_with(const SensitiveLexicon& lex, std::string_view text) {
    static RuleTagger tagger;
    std::vector<Token> tokens = tokenize(text);
    tagger.tag(tokens, "00000000");
    return lex.mask_text(text, tokens);
}

}  // namespace

TEST_CASE("builtin lexicon masks the expected categories") {
    SensitiveLexicon lex = SensitiveLexicon::builtin();
    CHECK(mask_with(lex, "my husband loves it") ==
          "my [FAMILY-MEMBER] loves it");
    CHECK(mask_with(lex, "63 year old woman") == "[AGE] [PERSON]");
    CHECK(mask_with(lex, "I am 5'5\" tall") == "[PHYSICAL] tall");
    CHECK(mask_with(lex, "my arthritis flared up") ==
          "my [MEDICAL] flared up");
    CHECK(mask_with(lex, "no personal details here") ==
          "no personal details here");
}

TEST_CASE("matching is case-insensitive, output keeps surroundings") {
    SensitiveLexicon lex = SensitiveLexicon::builtin();
    CHECK(mask_with(lex, "My HUSBAND, bless him, fixed it.") ==
          "My [FAMILY-MEMBER], bless him, fixed it.");
    CHECK(mask_with(lex, "Woman seeking sturdy desk") ==
          "[PERSON] seeking sturdy desk");
}

TEST_CASE("longest match wins over a shorter one") {
    SensitiveLexicon lex = SensitiveLexicon::builtin();
    // "arthritic hands" is a two-token pattern; "arthritic" alone also
    // matches, so the span must consume both tokens
    CHECK(mask_with(lex, "for my arthritic hands only") ==
          "for my [MEDICAL] only");
    CHECK(mask_with(lex, "arthritic knees ache") == "[MEDICAL] knees ache");
}

TEST_CASE("equal-length ties go to the category listed first") {
    SensitiveLexicon lex = SensitiveLexicon::from_string(
        "[First] replacement=\"[ONE]\"\n"
        "blue pen\n"
        "\n"
        "[Second] replacement=\"[TWO]\"\n"
        "blue pen\n");
    CHECK(mask_with(lex, "a blue pen") == "a [ONE]");
}

TEST_CASE("numeral wildcard accepts digit and measurement tokens") {
    SensitiveLexicon lex = SensitiveLexicon::builtin();
    CHECK(mask_with(lex, "I am 63 now") == "[PHYSICAL] now");
    // greedy left-to-right: "i'm NN" consumes the number, so the
    // trailing unit no longer completes "NN pounds"
    CHECK(mask_with(lex, "i'm 180 pounds") == "[PHYSICAL] pounds");
    CHECK(mask_with(lex, "weigh 80 kg") == "[PHYSICAL] kg");
    CHECK(mask_with(lex, "turned 40 last week") == "[AGE] last week");
}

TEST_CASE("masking a masked string changes nothing") {
    SensitiveLexicon lex = SensitiveLexicon::builtin();
    for (const char* text :
         {"my husband and my wife's 63 year old woman friend",
          "I am 5'5\" and pregnant, with arthritic hands",
          "my daughter turned 12 and my son is diabetic"}) {
        std::string once = mask_with(lex, text);
        CHECK(mask_with(lex, once) == once);
    }
}

TEST_CASE("token level masking collapses spans to one placeholder") {
    SensitiveLexicon lex = SensitiveLexicon::builtin();
    RuleTagger tagger;
    std::vector<Token> tokens = tokenize("a 63 year old gentleman");
    tagger.tag(tokens, "00000000");
    std::vector<Token> masked = lex.mask(tokens);
    REQUIRE(masked.size() == 3);
    CHECK(masked[0].surface == "a");
    CHECK(masked[1].surface == "[AGE]");
    CHECK(masked[2].surface == "[PERSON]");
}

TEST_CASE("lexicon files parse headers, comments, and patterns") {
    SensitiveLexicon lex = SensitiveLexicon::from_string(
        "# a comment\n"
        "[Pets] replacement=\"[PET]\"\n"
        "my cat\n"
        "my dog\n");
    REQUIRE(lex.categories().size() == 1);
    CHECK(lex.categories()[0].name == "Pets");
    CHECK(lex.categories()[0].replacement == "[PET]");
    CHECK(lex.categories()[0].patterns.size() == 2);
    CHECK(mask_with(lex, "my cat sheds") == "[PET] sheds");
}

TEST_CASE("malformed lexicon files are rejected with line numbers") {
    CHECK_THROWS_WITH_AS(
        (void)SensitiveLexicon::from_string("stray pattern\n"),
        doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        (void)SensitiveLexicon::from_string("[NoReplacement]\nword\n"),
        doctest::Contains("replacement"), std::runtime_error);
    CHECK_THROWS((void)SensitiveLexicon::from_file("missing_lexicon.txt"));
}
