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

#include "minrev/stem.hpp"

#include <array>
#include <cstddef>

namespace minrev {

namespace {

struct Stemmer {
  std::string w;

  bool is_cons(std::size_t i) const {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !is_cons(i - 1);
    return true;
  }

  // m of w[0..len): number of VC sequences in the [C](VC)^m[V] form
  std::size_t measure(std::size_t len) const {
    std::size_t m = 0, i = 0;
    while (i < len && is_cons(i)) ++i;
    for (;;) {
      while (i < len && !is_cons(i)) ++i;
      if (i >= len) break;
      while (i < len && is_cons(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (!is_cons(i)) return true;
    return false;
  }

  bool double_cons(std::size_t len) const {
    return len >= 2 && w[len - 1] == w[len - 2] && is_cons(len - 1);
  }

  // *o: ends consonant-vowel-consonant, final consonant not w, x or y
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!is_cons(len - 3) || is_cons(len - 2) || !is_cons(len - 1)) return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suf) const {
    return w.size() >= suf.size() &&
           std::string_view(w).substr(w.size() - suf.size()) == suf;
  }

  std::size_t stem_len(std::string_view suf) const {
    return w.size() - suf.size();
  }

  void set_suffix(std::string_view suf, std::string_view repl) {
    w.resize(w.size() - suf.size());
    w.append(repl);
  }

  void step1a() {
    if (ends("sses")) {
      set_suffix("sses", "ss");
    } else if (ends("ies")) {
      set_suffix("ies", "i");
    } else if (ends("ss")) {
      // unchanged
    } else if (ends("s")) {
      set_suffix("s", "");
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_len("eed")) > 0) set_suffix("eed", "ee");
      return;
    }
    bool removed = false;
    if (ends("ed") && has_vowel(stem_len("ed"))) {
      set_suffix("ed", "");
      removed = true;
    } else if (ends("ing") && has_vowel(stem_len("ing"))) {
      set_suffix("ing", "");
      removed = true;
    }
    if (!removed) return;
    if (ends("at") || ends("bl") || ends("iz")) {
      w.push_back('e');
    } else if (double_cons(w.size())) {
      char last = w.back();
      if (last != 'l' && last != 's' && last != 'z') w.pop_back();
    } else if (measure(w.size()) == 1 && cvc(w.size())) {
      w.push_back('e');
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_len("y"))) w.back() = 'i';
  }

  struct Rule {
    std::string_view suffix;
    std::string_view repl;
  };

  // Apply the longest matching suffix of the step; rules must be listed
  // longest-first. A match consumes the step even if its condition fails.
  void apply_rules(const Rule* rules, std::size_t count, std::size_t min_m) {
    for (std::size_t r = 0; r < count; ++r) {
      if (ends(rules[r].suffix)) {
        if (measure(stem_len(rules[r].suffix)) > min_m)
          set_suffix(rules[r].suffix, rules[r].repl);
        return;
      }
    }
  }

  void step2() {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"ization", "ize"}, {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"tional", "tion"},
        {"biliti", "ble"},  {"entli", "ent"},   {"ousli", "ous"},
        {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
        {"iviti", "ive"},   {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},
        {"ator", "ate"},    {"eli", "e"},
    }};
    apply_rules(rules.data(), rules.size(), 0);
  }

  void step3() {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ness", ""},  {"ful", ""},
    }};
    apply_rules(rules.data(), rules.size(), 0);
  }

  void step4() {
    static constexpr std::array<Rule, 19> rules{{
        {"ement", ""}, {"ance", ""}, {"ence", ""}, {"able", ""}, {"ible", ""},
        {"ment", ""},  {"ant", ""},  {"ent", ""},  {"ion", ""},  {"ism", ""},
        {"ate", ""},   {"iti", ""},  {"ous", ""},  {"ive", ""},  {"ize", ""},
        {"ou", ""},    {"al", ""},   {"er", ""},   {"ic", ""},
    }};
    for (const Rule& rule : rules) {
      if (!ends(rule.suffix)) continue;
      std::size_t len = stem_len(rule.suffix);
      bool ok = measure(len) > 1;
      if (rule.suffix == "ion")
        ok = ok && len > 0 && (w[len - 1] == 's' || w[len - 1] == 't');
      if (ok) set_suffix(rule.suffix, rule.repl);
      return;
    }
  }

  void step5a() {
    if (!ends("e")) return;
    std::size_t len = stem_len("e");
    std::size_t m = measure(len);
    if (m > 1 || (m == 1 && !cvc(len))) w.pop_back();
  }

  void step5b() {
    if (w.size() >= 2 && w.back() == 'l' && double_cons(w.size()) &&
        measure(w.size()) > 1)
      w.pop_back();
  }
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  Stemmer s{std::string(word)};
  s.step1a();
  s.step1b();
  s.step1c();
  s.step2();
  s.step3();
  s.step4();
  s.step5a();
  s.step5b();
  return std::move(s.w);
}

}  // namespace minrev
