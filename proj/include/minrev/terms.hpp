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
#include <unordered_set>
#include <vector>

namespace minrev {

// Fixed English stop-word list shipped with the library (~180 entries,
// includes contraction forms since the tokenizer keeps contractions whole).
const std::unordered_set<std::string>& english_stopwords();
bool is_stopword(std::string_view lowercased);

// tokenize -> lowercase -> drop punctuation and stop-words -> Porter-stem.
// The resulting terms are never empty and contain no whitespace.
std::vector<std::string> preprocess_terms(std::string_view text);

}  // namespace minrev
