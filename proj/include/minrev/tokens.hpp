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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace minrev {

// Coarse tagset. Removal strategies are defined over these classes.
enum class PosTag : std::uint8_t {
  Noun,
  ProperNoun,
  Pronoun,
  Verb,
  Numeral,
  Adjective,
  Adverb,
  Other,
  Punct,
};

const char* tag_name(PosTag tag);         // "NOUN", "PROPN", ...
PosTag parse_tag(std::string_view name);  // accepts coarse names and the
                                          // usual Penn/UD spellings; throws
                                          // std::runtime_error otherwise

struct Token {
  std::string surface;
  std::size_t start = 0;  // byte offset into the source text
  std::size_t end = 0;    // one past the last byte
  PosTag tag = PosTag::Other;
};

// Splits on whitespace and punctuation boundaries. Contractions ("don't"),
// hyphenated words ("well-made"), decimal/grouped numbers ("3.5", "5,000")
// and measurement strings (5'5", 6") stay single tokens. Runs of one
// punctuation character form one token ("...", "!!"). Offsets always satisfy
// text.substr(start, end - start) == surface.
std::vector<Token> tokenize(std::string_view text);

// True for tokens a numeral rule should catch: 63, 3.5, 5,000, 63rd, 5'5",
// 6", 8x10. Surface-based so it works before tagging.
bool is_numeral(std::string_view surface);

// No alphanumeric content at all.
bool is_punct_surface(std::string_view surface);

std::string lowercase(std::string_view s);  // ASCII lowering, bytes otherwise

}  // namespace minrev
