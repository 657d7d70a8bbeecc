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

#include "minrev/minimize.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "minrev/rng.hpp"

namespace minrev {

namespace {

const char* kStrategyUsage =
    "unaltered | wordtype[:TAG+TAG+...] | random[:p] | "
    "keeponly:TAG+TAG+... | masking";

bool has_tag(const std::vector<PosTag>& tags, PosTag t) {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<PosTag> parse_tag_list(std::string_view text) {
    std::vector<PosTag> tags;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t plus = text.find('+', pos);
        if (plus == std::string_view::npos) plus = text.size();
        std::string_view name = text.substr(pos, plus - pos);
        PosTag tag;
        try {
            tag = parse_tag(name);
        } catch (const std::exception&) {
            throw std::runtime_error("unknown tag '" + std::string(name) +
                                     "' in strategy, expected names like "
                                     "NOUN, VERB, ADJ, ADV, PRON, PROPN, "
                                     "NUM, OTHER");
        }
        if (!has_tag(tags, tag)) tags.push_back(tag);
        pos = plus + 1;
        if (plus == text.size()) break;
    }
    if (tags.empty()) {
        throw std::runtime_error("empty tag list in strategy");
    }
    return tags;
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

std::string tag_list_name(const std::vector<PosTag>& tags) {
    std::string out;
    for (size_t i = 0; i < tags.size(); ++i) {
        if (i) out.push_back('+');
        out += tag_name(tags[i]);
    }
    return out;
}

void require_tagger(const MinimizeContext& ctx) {
    if (!ctx.tagger) {
        throw std::runtime_error("strategy needs a tagger but none was given");
    }
}

std::string join_surfaces(const std::vector<Token>& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i].surface;
    }
    return out;
}

}  // namespace

Strategy Strategy::unaltered() { return Strategy{}; }

Strategy Strategy::wordtype() {
    return wordtype({PosTag::Noun, PosTag::ProperNoun, PosTag::Pronoun,
                     PosTag::Verb, PosTag::Numeral});
}

Strategy Strategy::wordtype(std::vector<PosTag> remove) {
    Strategy s;
    s.kind = StrategyKind::WordType;
    s.tags = std::move(remove);
    return s;
}

Strategy Strategy::random(double probability) {
    Strategy s;
    s.kind = StrategyKind::Random;
    s.probability = probability;
    return s;
}

Strategy Strategy::keep_only(std::vector<PosTag> keep) {
    Strategy s;
    s.kind = StrategyKind::KeepOnly;
    s.tags = std::move(keep);
    return s;
}

Strategy Strategy::masking() {
    Strategy s;
    s.kind = StrategyKind::Masking;
    return s;
}

std::string Strategy::name() const {
    switch (kind) {
        case StrategyKind::Unaltered:
            return "unaltered";
        case StrategyKind::WordType: {
            if (tags == wordtype().tags) return "wordtype";
            return "wordtype:" + tag_list_name(tags);
        }
        case StrategyKind::Random:
            return "random:" + format_probability(probability);
        case StrategyKind::KeepOnly:
            return "keeponly:" + tag_list_name(tags);
        case StrategyKind::Masking:
            return "masking";
    }
    return "unaltered";
}

Strategy parse_strategy(std::string_view text) {
    std::string_view kind = text;
    std::string_view arg;
    if (size_t colon = text.find(':'); colon != std::string_view::npos) {
        kind = text.substr(0, colon);
        arg = text.substr(colon + 1);
    }

    if (kind == "unaltered") {
        if (!arg.empty()) {
            throw std::runtime_error("strategy 'unaltered' takes no argument");
        }
        return Strategy::unaltered();
    }
    if (kind == "wordtype") {
        if (arg.empty()) return Strategy::wordtype();
        return Strategy::wordtype(parse_tag_list(arg));
    }
    if (kind == "random") {
        if (arg.empty()) return Strategy::random(0.5);
        char* end = nullptr;
        std::string arg_str(arg);
        double p = std::strtod(arg_str.c_str(), &end);
        if (end != arg_str.c_str() + arg_str.size() || !(p >= 0.0) ||
            !(p <= 1.0)) {
            throw std::runtime_error(
                "random removal probability must be in [0,1], got '" +
                arg_str + "'");
        }
        return Strategy::random(p);
    }
    if (kind == "keeponly") {
        if (arg.empty()) {
            throw std::runtime_error(
                "strategy 'keeponly' needs a tag list, e.g. keeponly:ADJ+ADV");
        }
        return Strategy::keep_only(parse_tag_list(arg));
    }
    if (kind == "masking") {
        if (!arg.empty()) {
            throw std::runtime_error("strategy 'masking' takes no argument");
        }
        return Strategy::masking();
    }
    throw std::runtime_error("unknown strategy '" + std::string(text) +
                             "', expected: " + kStrategyUsage);
}

std::vector<Token> minimize_tokens(std::vector<Token> tokens,
                                   const Strategy& strategy,
                                   std::string_view review_id,
                                   const MinimizeContext& ctx) {
    switch (strategy.kind) {
        case StrategyKind::Unaltered:
            return tokens;

        case StrategyKind::WordType: {
            require_tagger(ctx);
            ctx.tagger->tag(tokens, review_id);
            std::vector<Token> kept;
            kept.reserve(tokens.size());
            for (Token& tok : tokens) {
                if (tok.tag == PosTag::Punct) continue;
                if (has_tag(strategy.tags, tok.tag)) continue;
                kept.push_back(std::move(tok));
            }
            return kept;
        }

        case StrategyKind::Random: {
            rng::SplitMix64 stream(rng::hash_seed_str(ctx.seed, review_id));
            std::vector<Token> kept;
            kept.reserve(tokens.size());
            for (Token& tok : tokens) {
                if (is_punct_surface(tok.surface)) continue;
                if (stream.next_unit() < strategy.probability) continue;
                kept.push_back(std::move(tok));
            }
            return kept;
        }

        case StrategyKind::KeepOnly: {
            require_tagger(ctx);
            ctx.tagger->tag(tokens, review_id);
            std::vector<Token> kept;
            kept.reserve(tokens.size());
            for (Token& tok : tokens) {
                if (tok.tag == PosTag::Punct) continue;
                if (!has_tag(strategy.tags, tok.tag)) continue;
                kept.push_back(std::move(tok));
            }
            return kept;
        }

        case StrategyKind::Masking: {
            if (!ctx.lexicon) {
                throw std::runtime_error(
                    "masking strategy needs a sensitive-phrase lexicon");
            }
            if (ctx.tagger) ctx.tagger->tag(tokens, review_id);
            return ctx.lexicon->mask(tokens);
        }
    }
    throw std::logic_error("unknown strategy kind");
}

std::string minimize(std::string_view text, const Strategy& strategy,
                     std::string_view review_id, const MinimizeContext& ctx) {
    if (strategy.kind == StrategyKind::Unaltered) {
        return std::string(text);
    }
    std::vector<Token> tokens = tokenize(text);
    if (strategy.kind == StrategyKind::Masking) {
        if (!ctx.lexicon) {
            throw std::runtime_error(
                "masking strategy needs a sensitive-phrase lexicon");
        }
        if (ctx.tagger) ctx.tagger->tag(tokens, review_id);
        return ctx.lexicon->mask_text(text, tokens);
    }
    return join_surfaces(minimize_tokens(std::move(tokens), strategy,
                                         review_id, ctx));
}

double removal_fraction(const Dataset& ds, const Strategy& strategy,
                        const MinimizeContext& ctx) {
    size_t before = 0;
    size_t after = 0;
    for (const Review& r : ds.reviews) {
        std::vector<Token> tokens = tokenize(r.text);
        for (const Token& tok : tokens) {
            if (!is_punct_surface(tok.surface)) ++before;
        }
        std::vector<Token> kept =
            minimize_tokens(std::move(tokens), strategy, r.review_id, ctx);
        for (const Token& tok : kept) {
            if (!is_punct_surface(tok.surface)) ++after;
        }
    }
    if (before == 0) return 0.0;
    return 1.0 - static_cast<double>(after) / static_cast<double>(before);
}

}  // namespace minrev
