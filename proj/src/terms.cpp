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

#include "minrev/terms.hpp"

#include "minrev/stem.hpp"
#include "minrev/tokens.hpp"

namespace minrev {

std::vector<std::string> preprocess_terms(std::string_view text) {
    std::vector<std::string> terms;
    for (const Token& tok : tokenize(text)) {
        if (is_punct_surface(tok.surface)) continue;
        std::string lower = lowercase(tok.surface);
        if (is_stopword(lower)) continue;
        terms.push_back(porter_stem(lower));
    }
    return terms;
}

}  // namespace minrev
