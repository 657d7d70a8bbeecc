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

#include <cstdint>
#include <string>
#include <vector>

#include "minrev/evaluate.hpp"

namespace minrev {

struct ReportRow {
    std::string dataset;
    std::string strategy;  // strategy or baseline name
    EvalResult result;
};

// Header comment line with the config hash and seed, then
// dataset,strategy,mrr,recall,hit_rate,n_cases,skipped,seed with metrics
// printed to six decimal places.
std::string report_csv(const std::vector<ReportRow>& rows,
                       std::uint64_t config_hash, std::uint64_t seed);

// One markdown table per dataset, metrics to four decimal places.
std::string report_markdown(const std::vector<ReportRow>& rows,
                            std::size_t cutoff);

}  // namespace minrev
