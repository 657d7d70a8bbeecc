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

#include "fixtures.hpp"
#include "minrev/lexicon.hpp"
#include "minrev/minimize.hpp"
#include "minrev/tagger.hpp"

using namespace minrev;

namespace {

struct Env {
    RuleTagger tagger;
    SensitiveLexicon lexicon = SensitiveLexicon::builtin();
    MinimizeContext ctx;
    Env() {
        ctx.tagger = &tagger;
        ctx.lexicon = &lexicon;
        ctx.seed = 42;
    }
};

}  // namespace

TEST_CASE("strategy names parse and print canonically") {
    CHECK(parse_strategy("unaltered").name() == "unaltered");
    CHECK(parse_strategy("wordtype").name() == "wordtype");
    CHECK(parse_strategy("wordtype:NOUN+VERB").name() == "wordtype:NOUN+VERB");
    CHECK(parse_strategy("random").name() == "random:0.5");
    CHECK(parse_strategy("random:0.25").name() == "random:0.25");
    CHECK(parse_strategy("keeponly:ADJ+ADV").name() == "keeponly:ADJ+ADV");
    CHECK(parse_strategy("masking").name() == "masking");

    CHECK_THROWS_WITH_AS((void)parse_strategy("bogus"),
                         doctest::Contains("unknown strategy"),
                         std::runtime_error);
    CHECK_THROWS((void)parse_strategy("random:1.5"));
    CHECK_THROWS((void)parse_strategy("random:oops"));
    CHECK_THROWS((void)parse_strategy("keeponly:"));
    CHECK_THROWS((void)parse_strategy("wordtype:XYZ"));
    CHECK_THROWS((void)parse_strategy("unaltered:x"));
}

TEST_CASE("unaltered returns the input bytes untouched") {
    Env env;
    std::string text = "  Weird   spacing\tand, punctuation!!  ";
    CHECK(minimize(text, Strategy::unaltered(), "00000000", env.ctx) == text);
}

TEST_CASE("wordtype drops the removal classes and punctuation") {
    Env env;
    CHECK(minimize("The sturdy chair broke quickly.", Strategy::wordtype(),
                   "00000000", env.ctx) == "The sturdy quickly");
    CHECK(minimize("I love it!", Strategy::wordtype(), "00000000", env.ctx) ==
          "");
    // custom removal set: only nouns go
    Strategy nouns_only = parse_strategy("wordtype:NOUN");
    CHECK(minimize("The sturdy chair broke quickly.", nouns_only, "00000000",
                   env.ctx) == "The sturdy broke quickly");
}

TEST_CASE("keeponly output tags never overlap the wordtype removal set") {
    Env env;
    Strategy keep = parse_strategy("keeponly:ADJ+ADV");
    Strategy remove = Strategy::wordtype();

    testfx::SyntheticSpec spec;
    spec.n_reviews = 80;
    Dataset ds = testfx::synthetic_dataset(spec);
    for (const Review& r : ds.reviews) {
        std::vector<Token> kept = minimize_tokens(tokenize(r.text), keep,
                                                  r.review_id, env.ctx);
        for (const Token& t : kept) {
            bool in_keep_set =
                t.tag == PosTag::Adjective || t.tag == PosTag::Adverb;
            CHECK(in_keep_set);
            for (PosTag removed : remove.tags) CHECK(t.tag != removed);
        }
    }
}

TEST_CASE("wordtype filtering is idempotent on tagged tokens") {
    Env env;
    testfx::SyntheticSpec spec;
    spec.n_reviews = 80;
    spec.sensitive_phrases = true;
    Dataset ds = testfx::synthetic_dataset(spec);
    for (const Review& r : ds.reviews) {
        std::vector<Token> once = minimize_tokens(
            tokenize(r.text), Strategy::wordtype(), r.review_id, env.ctx);
        std::vector<Token> twice =
            minimize_tokens(once, Strategy::wordtype(), r.review_id, env.ctx);
        REQUIRE(twice.size() == once.size());
        for (std::size_t i = 0; i < once.size(); ++i) {
            CHECK(twice[i].surface == once[i].surface);
        }
    }
}

TEST_CASE("random removal is seeded per review") {
    Env env;
    std::string text = "one two three four five six seven eight nine ten";
    Strategy half = Strategy::random(0.5);

    std::string a = minimize(text, half, "00000007", env.ctx);
    std::string b = minimize(text, half, "00000007", env.ctx);
    CHECK(a == b);  // same review id, same outcome

    // across many reviews the ids must not all agree
    std::string c = minimize(text, half, "00000008", env.ctx);
    std::string d = minimize(text, half, "00000009", env.ctx);
    CHECK((a != c || a != d));

    CHECK(minimize(text, Strategy::random(0.0), "00000007", env.ctx) == text);
    CHECK(minimize(text, Strategy::random(1.0), "00000007", env.ctx) == "");
    CHECK(minimize("so good!!", Strategy::random(0.0), "00000001", env.ctx) ==
          "so good");  // punctuation goes even at p=0
}

TEST_CASE("random removal rate concentrates near p") {
    Env env;
    testfx::SyntheticSpec spec;
    spec.n_reviews = 600;
    Dataset ds = testfx::synthetic_dataset(spec);
    double f = removal_fraction(ds, Strategy::random(0.5), env.ctx);
    CHECK(f == doctest::Approx(0.5).epsilon(0.04));
    CHECK(removal_fraction(ds, Strategy::unaltered(), env.ctx) == 0.0);
}

TEST_CASE("masking replaces phrases and leaves the rest byte-exact") {
    Env env;
    Strategy masking = Strategy::masking();
    CHECK(minimize("my husband loves it", masking, "00000000", env.ctx) ==
          "my [FAMILY-MEMBER] loves it");
    CHECK(minimize("I am a 63 year old woman.", masking, "00000000",
                   env.ctx) == "I am a [AGE] [PERSON].");
    // spacing and punctuation around the span survive untouched
    CHECK(minimize("great!  my   husband agrees...", masking, "00000000",
                   env.ctx) == "great!  my   [FAMILY-MEMBER] agrees...");
}

TEST_CASE("masking twice equals masking once") {
    Env env;
    Strategy masking = Strategy::masking();
    testfx::SyntheticSpec spec;
    spec.n_reviews = 120;
    spec.sensitive_phrases = true;
    Dataset ds = testfx::synthetic_dataset(spec);
    for (const Review& r : ds.reviews) {
        std::string once = minimize(r.text, masking, r.review_id, env.ctx);
        std::string twice = minimize(once, masking, r.review_id, env.ctx);
        CHECK(twice == once);
    }
}

TEST_CASE("strategies that need collaborators fail without them") {
    MinimizeContext bare;
    CHECK_THROWS_WITH_AS((void)minimize("a chair", Strategy::wordtype(),
                                        "00000000", bare),
                         doctest::Contains("tagger"), std::runtime_error);
    CHECK_THROWS_WITH_AS((void)minimize("a chair", Strategy::masking(),
                                        "00000000", bare),
                         doctest::Contains("lexicon"), std::runtime_error);
    // unaltered and random need neither
    CHECK_NOTHROW((void)minimize("a chair", Strategy::unaltered(), "00000000",
                                 bare));
    CHECK_NOTHROW((void)minimize("a chair", Strategy::random(0.5), "00000000",
                                 bare));
}
