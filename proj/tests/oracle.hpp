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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace minrev::testfx {

// Brute-force tf-idf model over ordinary maps, written independently of
// the library so the two can check each other. Weight = tf * ln(N / df)
// with N the number of items having at least one term; zero weights are
// dropped.
struct OracleModel {
    std::map<std::string, std::map<std::string, double>> weights;
    std::map<std::string, double> norms;
};

inline OracleModel oracle_tfidf(
    const std::map<std::string, std::vector<std::string>>& item_terms) {
    OracleModel m;
    std::size_t n_docs = 0;
    std::map<std::string, std::size_t> df;
    for (const auto& [item, terms] : item_terms) {
        if (terms.empty()) continue;
        ++n_docs;
        std::map<std::string, std::size_t> counts;
        for (const std::string& t : terms) ++counts[t];
        for (const auto& [t, c] : counts) ++df[t];
    }
    for (const auto& [item, terms] : item_terms) {
        std::map<std::string, double>& w = m.weights[item];
        std::map<std::string, std::size_t> counts;
        for (const std::string& t : terms) ++counts[t];
        for (const auto& [t, c] : counts) {
            double idf = std::log(static_cast<double>(n_docs) /
                                  static_cast<double>(df.at(t)));
            double weight = static_cast<double>(c) * idf;
            if (weight != 0.0) w[t] = weight;
        }
        double ss = 0.0;
        for (const auto& [t, weight] : w) ss += weight * weight;
        m.norms[item] = std::sqrt(ss);
    }
    return m;
}

inline double oracle_cosine(const OracleModel& m, const std::string& a,
                            const std::string& b) {
    const auto& wa = m.weights.at(a);
    const auto& wb = m.weights.at(b);
    double na = m.norms.at(a), nb = m.norms.at(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    double dot = 0.0;
    for (const auto& [t, w] : wa) {
        auto it = wb.find(t);
        if (it != wb.end()) dot += w * it->second;
    }
    return dot / (na * nb);
}

inline double oracle_score(const OracleModel& m,
                           const std::vector<std::string>& history,
                           const std::string& item) {
    if (!m.weights.count(item)) return 0.0;
    double s = 0.0;
    for (const std::string& j : history) {
        if (m.weights.count(j)) s += oracle_cosine(m, item, j);
    }
    return s;
}

// Candidates ordered by score descending, ties by item id ascending.
inline std::vector<std::string> oracle_rank(
    const OracleModel& m, const std::vector<std::string>& history,
    std::vector<std::string> candidates) {
    std::map<std::string, double> score;
    for (const std::string& c : candidates) {
        score[c] = oracle_score(m, history, c);
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const std::string& x, const std::string& y) {
                  if (score[x] != score[y]) return score[x] > score[y];
                  return x < y;
              });
    return candidates;
}

}  // namespace minrev::testfx
