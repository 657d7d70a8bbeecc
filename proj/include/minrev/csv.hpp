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
#include <vector>

namespace minrev {

// RFC 4180 parsing: fields separated by commas, records by newlines,
// quoted fields may contain commas, doubled quotes, and newlines.
// Accepts both \n and \r\n record separators.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Quotes a field only when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

std::string csv_join(const std::vector<std::string>& fields);

}  // namespace minrev
