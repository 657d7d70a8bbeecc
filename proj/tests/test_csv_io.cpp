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

#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "minrev/csv.hpp"
#include "minrev/io.hpp"

using namespace minrev;

namespace {

std::string gzip_bytes(const std::string& plain) {
    z_stream zs{};
    REQUIRE(deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8,
                         Z_DEFAULT_STRATEGY) == Z_OK);
    std::string out(plain.size() + 128, '\0');
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(plain.data()));
    zs.avail_in = static_cast<uInt>(plain.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    REQUIRE(deflate(&zs, Z_FINISH) == Z_STREAM_END);
    out.resize(zs.total_out);
    deflateEnd(&zs);
    return out;
}

std::string temp_path(const char* name) {
    return std::string("minrev_test_") + name;
}

}  // namespace

TEST_CASE("csv parses quoted fields") {
    auto rows = parse_csv("a,b,c\n\"x,y\",\"he said \"\"hi\"\"\",\"line\nbreak\"\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
    CHECK(rows[1][0] == "x,y");
    CHECK(rows[1][1] == "he said \"hi\"");
    CHECK(rows[1][2] == "line\nbreak");
}

TEST_CASE("csv accepts crlf and a missing final newline") {
    auto rows = parse_csv("a,b\r\nc,d");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == std::vector<std::string>{"c", "d"});
}

TEST_CASE("csv rejects an unterminated quote") {
    CHECK_THROWS_WITH_AS((void)parse_csv("a,\"oops\n"),
                         doctest::Contains("unterminated"),
                         std::runtime_error);
}

TEST_CASE("escape and join invert the parser") {
    std::vector<std::string> fields = {"plain", "with,comma", "with \"quote\"",
                                       "multi\nline", ""};
    auto rows = parse_csv(csv_join(fields) + "\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == fields);

    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("text files round trip") {
    std::string path = temp_path("roundtrip.txt");
    write_text_file(path, "hello\nworld\n");
    CHECK(read_text_file(path) == "hello\nworld\n");
    std::remove(path.c_str());

    CHECK_THROWS(read_text_file("does/not/exist.txt"));
}

TEST_CASE("gzip files are read transparently") {
    std::string plain = "user_id,item_id\nu1,i1\n";
    std::string gz = gzip_bytes(plain);
    REQUIRE(is_gzip(gz));
    CHECK_FALSE(is_gzip(plain));
    CHECK(gunzip(gz) == plain);

    std::string path = temp_path("reviews.csv.gz");
    write_text_file(path, gz);
    CHECK(read_text_file(path) == plain);
    std::remove(path.c_str());
}

TEST_CASE("gunzip rejects garbage") {
    std::string bad = "\x1f\x8b";
    bad += "not really gzip";
    CHECK_THROWS(gunzip(bad));
}
