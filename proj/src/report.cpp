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

#include "minrev/report.hpp"

#include <cinttypes>
#include <cstdio>

#include "minrev/csv.hpp"

namespace minrev {

namespace {

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

}  // namespace

std::string report_csv(const std::vector<ReportRow>& rows,
                       std::uint64_t config_hash, std::uint64_t seed) {
    char head[128];
    std::snprintf(head, sizeof(head),
                  "# config_hash=%016" PRIx64 " seed=%" PRIu64 "\n",
                  config_hash, seed);
    std::string out = head;
    out += "dataset,strategy,mrr,recall,hit_rate,n_cases,skipped,seed\n";
    for (const ReportRow& row : rows) {
        out += csv_join({row.dataset, row.strategy,
                         fixed(row.result.mrr, 6), fixed(row.result.recall, 6),
                         fixed(row.result.hit_rate, 6),
                         std::to_string(row.result.n_cases),
                         std::to_string(row.result.skipped),
                         std::to_string(seed)});
        out.push_back('\n');
    }
    return out;
}

std::string report_markdown(const std::vector<ReportRow>& rows,
                            std::size_t cutoff) {
    std::string out;
    std::string current_dataset;
    bool first = true;
    for (const ReportRow& row : rows) {
        if (row.dataset != current_dataset) {
            current_dataset = row.dataset;
            if (!first) out += "\n";
            first = false;
            out += "## " + row.dataset + "\n\n";
            out += "| Strategy | MRR | Recall@" + std::to_string(cutoff) +
                   " | HitRate@" + std::to_string(cutoff) + " | Cases |\n";
            out += "|---|---|---|---|---|\n";
        }
        out += "| " + row.strategy + " | " + fixed(row.result.mrr, 4) +
               " | " + fixed(row.result.recall, 4) + " | " +
               fixed(row.result.hit_rate, 4) + " | " +
               std::to_string(row.result.n_cases) + " |\n";
    }
    return out;
}

}  // namespace minrev
