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

namespace minrev {

// Reads a whole file into memory. Files starting with the gzip magic
// bytes (0x1f 0x8b) are decompressed transparently.
std::string read_text_file(const std::string& path);

void write_text_file(const std::string& path, std::string_view content);

bool is_gzip(std::string_view bytes);
std::string gunzip(std::string_view bytes);

}  // namespace minrev
