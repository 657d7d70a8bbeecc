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

#include <cstdio>
#include <string>
#include <vector>

#include "minrev/corpus.hpp"
#include "minrev/rng.hpp"

namespace minrev::testfx {

// Deterministic synthetic review corpus. Texts are built from small word
// pools the rule tagger knows, so removal strategies behave the way they
// would on real reviews. Timestamps strictly increase with record order.
struct SyntheticSpec {
    std::size_t n_users = 40;
    std::size_t n_items = 30;
    std::size_t n_reviews = 300;
    std::uint64_t seed = 7;
    bool sensitive_phrases = false;  // mix in maskable phrases
};

inline Dataset synthetic_dataset(const SyntheticSpec& spec) {
    static const char* kAdjectives[] = {
        "great", "sturdy", "comfortable", "cheap",  "solid", "heavy",
        "light", "smooth", "bright",      "quiet",  "soft",  "firm",
        "nice",  "small",  "large",       "simple", "deep",  "wide",
    };
    static const char* kNouns[] = {
        "chair", "desk",    "lamp",  "keyboard", "mouse",   "monitor",
        "pillow", "stapler", "binder", "pen",     "paper",   "drawer",
        "shelf", "cable",   "screen", "wheel",    "cushion", "box",
    };
    static const char* kVerbs[] = {
        "works", "fits",    "broke",  "arrived", "holds",   "feels",
        "looks", "squeaks", "slides", "adjusts", "shipped", "lasted",
    };
    static const char* kAdverbs[] = {
        "quickly", "easily", "nicely",  "firmly", "really",
        "very",    "well",   "barely",  "so",     "too",
    };
    static const char* kOpeners[] = {"the", "this", "my", "a", "that"};
    static const char* kSensitive[] = {
        "my husband loves it",      "as a 63 year old woman",
        "my arthritic hands ache",  "i am 5'5\" so it fits",
        "bought for my diabetic son",
    };

    Dataset ds;
    ds.reviews.reserve(spec.n_reviews);
    char buf[32];
    for (std::size_t n = 0; n < spec.n_reviews; ++n) {
        rng::SplitMix64 stream(
            rng::Hasher().u64(spec.seed).u64(n).value());
        Review r;
        std::snprintf(buf, sizeof(buf), "u%04zu",
                      static_cast<std::size_t>(stream.bounded(spec.n_users)));
        r.user_id = buf;
        std::snprintf(buf, sizeof(buf), "i%04zu",
                      static_cast<std::size_t>(stream.bounded(spec.n_items)));
        r.item_id = buf;
        r.rating = 1.0 + static_cast<double>(stream.bounded(5));
        r.timestamp = 1400000000 + static_cast<int64_t>(n) * 3600;

        std::string text;
        std::size_t sentences = 1 + stream.bounded(3);
        for (std::size_t s = 0; s < sentences; ++s) {
            if (!text.empty()) text += ' ';
            text += kOpeners[stream.bounded(std::size(kOpeners))];
            text += ' ';
            text += kAdjectives[stream.bounded(std::size(kAdjectives))];
            text += ' ';
            text += kNouns[stream.bounded(std::size(kNouns))];
            text += ' ';
            text += kVerbs[stream.bounded(std::size(kVerbs))];
            text += ' ';
            text += kAdverbs[stream.bounded(std::size(kAdverbs))];
            text += '.';
        }
        if (spec.sensitive_phrases && stream.bounded(4) == 0) {
            text += ' ';
            text += kSensitive[stream.bounded(std::size(kSensitive))];
            text += '.';
        }
        r.text = std::move(text);
        ds.reviews.push_back(std::move(r));
    }
    for (std::size_t n = 0; n < ds.reviews.size(); ++n) {
        std::snprintf(buf, sizeof(buf), "%08zu", n);
        ds.reviews[n].review_id = buf;
    }
    return ds;
}

}  // namespace minrev::testfx
