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

#include "minrev/tokens.hpp"

#include <cctype>
#include <stdexcept>

namespace minrev {

namespace {

inline bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }
inline bool is_digit_byte(unsigned char c) { return c >= '0' && c <= '9'; }
inline bool is_alpha_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}
inline bool is_word_byte(unsigned char c) {
  return is_alpha_byte(c) || is_digit_byte(c);
}

}  // namespace

const char* tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::Noun:
      return "NOUN";
    case PosTag::ProperNoun:
      return "PROPN";
    case PosTag::Pronoun:
      return "PRON";
    case PosTag::Verb:
      return "VERB";
    case PosTag::Numeral:
      return "NUM";
    case PosTag::Adjective:
      return "ADJ";
    case PosTag::Adverb:
      return "ADV";
    case PosTag::Other:
      return "OTHER";
    case PosTag::Punct:
      return "PUNCT";
  }
  return "?";
}

PosTag parse_tag(std::string_view name) {
  std::string up;
  up.reserve(name.size());
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

  if (up == "NOUN") return PosTag::Noun;
  if (up == "PROPN") return PosTag::ProperNoun;
  if (up == "PRON") return PosTag::Pronoun;
  if (up == "VERB" || up == "AUX") return PosTag::Verb;
  if (up == "NUM") return PosTag::Numeral;
  if (up == "ADJ") return PosTag::Adjective;
  if (up == "ADV") return PosTag::Adverb;
  if (up == "OTHER" || up == "X" || up == "DET" || up == "ADP" || up == "CONJ" ||
      up == "CCONJ" || up == "SCONJ" || up == "PART" || up == "INTJ" ||
      up == "SYM")
    return PosTag::Other;
  if (up == "PUNCT") return PosTag::Punct;

  // Penn Treebank
  if (up.rfind("NNP", 0) == 0) return PosTag::ProperNoun;
  if (up.rfind("NN", 0) == 0) return PosTag::Noun;
  if (up.rfind("VB", 0) == 0 || up == "MD") return PosTag::Verb;
  if (up.rfind("JJ", 0) == 0) return PosTag::Adjective;
  if (up.rfind("RB", 0) == 0 || up == "WRB") return PosTag::Adverb;
  if (up == "PRP" || up == "PRP$" || up == "WP" || up == "WP$")
    return PosTag::Pronoun;
  if (up == "CD") return PosTag::Numeral;
  if (up == "." || up == "," || up == ":" || up == "``" || up == "''" ||
      up == "-LRB-" || up == "-RRB-" || up == "HYPH")
    return PosTag::Punct;
  if (up == "DT" || up == "IN" || up == "CC" || up == "TO" || up == "UH" ||
      up == "EX" || up == "PDT" || up == "POS" || up == "RP" || up == "WDT" ||
      up == "FW" || up == "LS" || up == "SYM")
    return PosTag::Other;

  throw std::runtime_error("unknown part-of-speech tag '" + std::string(name) +
                           "'");
}

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s)
    out.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
  return out;
}

bool is_punct_surface(std::string_view surface) {
  for (unsigned char c : surface)
    if (is_word_byte(c)) return false;
  return !surface.empty();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  const std::size_t n = text.size();
  std::size_t i = 0;

  auto at = [&](std::size_t k) -> unsigned char {
    return k < n ? static_cast<unsigned char>(text[k]) : 0;
  };

  while (i < n) {
    unsigned char c = at(i);
    if (is_space_byte(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_word_byte(c)) {
      ++i;
      while (i < n) {
        unsigned char cur = at(i);
        unsigned char prev = at(i - 1);
        if (is_word_byte(cur)) {
          ++i;
          continue;
        }
        if (cur == '\'' &&
            ((is_alpha_byte(prev) && is_alpha_byte(at(i + 1))) ||
             is_digit_byte(prev))) {
          ++i;  // contraction apostrophe or foot mark
          continue;
        }
        if (cur == '"' && is_digit_byte(prev)) {
          ++i;  // inch mark: 5'5" or 6"
          continue;
        }
        if ((cur == '.' || cur == ',') && is_digit_byte(prev) &&
            is_digit_byte(at(i + 1))) {
          ++i;  // decimal point / group separator
          continue;
        }
        if (cur == '-' && is_word_byte(prev) && is_word_byte(at(i + 1))) {
          ++i;  // hyphenated word
          continue;
        }
        break;
      }
    } else {
      // a run of one repeated punctuation byte forms a single token
      ++i;
      while (i < n && at(i) == c) ++i;
    }
    Token tok;
    tok.surface.assign(text.substr(start, i - start));
    tok.start = start;
    tok.end = i;
    out.push_back(std::move(tok));
  }
  return out;
}

bool is_numeral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  const std::size_t n = s.size();
  auto digits = [&]() {
    std::size_t k = 0;
    while (i < n && is_digit_byte(static_cast<unsigned char>(s[i]))) ++i, ++k;
    return k;
  };
  auto number = [&]() {  // 12, 3.5, 5,000
    if (digits() == 0) return false;
    while (i < n && (s[i] == '.' || s[i] == ',')) {
      ++i;
      if (digits() == 0) return false;
    }
    return true;
  };
  if (!number()) return false;
  if (i == n) return true;

  // ordinal suffix: 1st 2nd 3rd 63rd 4th
  if (n - i == 2) {
    char a = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    char b =
        static_cast<char>(std::tolower(static_cast<unsigned char>(s[i + 1])));
    if ((a == 's' && b == 't') || (a == 'n' && b == 'd') ||
        (a == 'r' && b == 'd') || (a == 't' && b == 'h'))
      return true;
  }
  // dimension: 8x10
  if (s[i] == 'x' || s[i] == 'X') {
    ++i;
    return number() && i == n;
  }
  // measurement: 5'  5'5  5'5"  6"
  if (s[i] == '\'') {
    ++i;
    if (i < n && is_digit_byte(static_cast<unsigned char>(s[i])) && !number())
      return false;
    if (i < n && s[i] == '"') ++i;
    return i == n;
  }
  if (s[i] == '"') return ++i == n;
  return false;
}

}  // namespace minrev
