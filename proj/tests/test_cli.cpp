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
#include <cstdlib>
#include <string>

#include "fixtures.hpp"
#include "minrev/corpus.hpp"
#include "minrev/io.hpp"

// supplied by the build so the test drives the real executable
#ifndef MINREV_CLI_PATH
#define MINREV_CLI_PATH "./minrev"
#endif

using namespace minrev;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(MINREV_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    return status;
}

struct TempCorpus {
    std::string path = "minrev_test_cli_corpus.csv";
    TempCorpus() {
        testfx::SyntheticSpec spec;
        spec.n_users = 60;
        spec.n_items = 120;
        spec.n_reviews = 1200;
        spec.sensitive_phrases = true;
        save_reviews(path, testfx::synthetic_dataset(spec),
                     ReviewFormat::Csv);
    }
    ~TempCorpus() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli stats and minimize run end to end") {
    TempCorpus corpus;
    CHECK(run("stats --dataset " + corpus.path +
              " --format csv > minrev_test_cli_stats.txt") == 0);
    std::string stats = read_text_file("minrev_test_cli_stats.txt");
    CHECK(stats.find("reviews") != std::string::npos);
    CHECK(stats.find("1200") != std::string::npos);
    std::remove("minrev_test_cli_stats.txt");

    CHECK(run("minimize --dataset " + corpus.path +
              " --format csv --strategy masking "
              "--out minrev_test_cli_masked.csv") == 0);
    Dataset masked =
        load_reviews("minrev_test_cli_masked.csv", ReviewFormat::Csv);
    CHECK(masked.size() == 1200);
    std::string meta = read_text_file("minrev_test_cli_masked.csv.meta");
    CHECK(meta.find("config_hash=") != std::string::npos);
    CHECK(meta.find("strategy=masking") != std::string::npos);
    std::remove("minrev_test_cli_masked.csv");
    std::remove("minrev_test_cli_masked.csv.meta");
}

TEST_CASE("cli evaluate reruns byte-identically") {
    TempCorpus corpus;
    std::string base = "evaluate --dataset " + corpus.path +
                       " --format csv --k 50 --cutoff 10 --seed 42 "
                       "--strategies unaltered,wordtype ";
    CHECK(run(base + "--threads 4 --out minrev_test_cli_a.csv "
                     "> /dev/null 2>&1") == 0);
    CHECK(run(base + "--threads 1 --out minrev_test_cli_b.csv "
                     "> /dev/null 2>&1") == 0);
    std::string a = read_text_file("minrev_test_cli_a.csv");
    std::string b = read_text_file("minrev_test_cli_b.csv");
    CHECK(a == b);
    CHECK(a.find("unaltered") != std::string::npos);
    CHECK(a.find("wordtype") != std::string::npos);
    CHECK(a.find("mostpop") != std::string::npos);
    CHECK(a.find("random") != std::string::npos);
    std::remove("minrev_test_cli_a.csv");
    std::remove("minrev_test_cli_b.csv");
}

TEST_CASE("cli rejects nonsense with a nonzero exit") {
    CHECK(run("stats --dataset no_such_file.csv --format csv "
              "2> /dev/null") != 0);
    TempCorpus corpus;
    CHECK(run("minimize --dataset " + corpus.path +
              " --format csv --strategy bogus --out x.csv "
              "2> /dev/null") != 0);
    CHECK(run("evaluate --dataset " + corpus.path +
              " --format csv --pool nowhere 2> /dev/null") != 0);
}
