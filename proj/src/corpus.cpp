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

#include "minrev/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "minrev/csv.hpp"
#include "minrev/io.hpp"
#include "minrev/tokens.hpp"

namespace minrev {

namespace {

using nlohmann::json;

std::string make_review_id(size_t ordinal) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08zu", ordinal);
    return buf;
}

[[noreturn]] void fail_line(size_t line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

void validate_review(const Review& r, size_t line) {
    if (r.user_id.empty()) fail_line(line, "empty user id");
    if (r.item_id.empty()) fail_line(line, "empty item id");
    if (!(r.rating >= 1.0 && r.rating <= 5.0)) {
        fail_line(line, "rating " + std::to_string(r.rating) +
                            " out of range [1,5]");
    }
    if (r.timestamp < 0) fail_line(line, "negative timestamp");
}

Dataset load_json_lines(std::string_view content) {
    Dataset ds;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos < content.size()) {
        size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        std::string_view line = content.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            fail_line(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) fail_line(line_no, "expected a JSON object");

        Review r;
        r.review_id = make_review_id(ds.reviews.size());
        auto require = [&](const char* key) -> const json& {
            auto it = obj.find(key);
            if (it == obj.end()) {
                fail_line(line_no,
                          std::string("missing key '") + key + "'");
            }
            return *it;
        };
        const json& user = require("reviewerID");
        if (!user.is_string()) fail_line(line_no, "reviewerID must be a string");
        r.user_id = user.get<std::string>();

        const json& item = require("asin");
        if (!item.is_string()) fail_line(line_no, "asin must be a string");
        r.item_id = item.get<std::string>();

        const json& rating = require("overall");
        if (!rating.is_number()) fail_line(line_no, "overall must be a number");
        r.rating = rating.get<double>();

        const json& ts = require("unixReviewTime");
        if (!ts.is_number_integer()) {
            fail_line(line_no, "unixReviewTime must be an integer");
        }
        r.timestamp = ts.get<int64_t>();

        if (auto it = obj.find("reviewText"); it != obj.end()) {
            if (!it->is_string()) {
                fail_line(line_no, "reviewText must be a string");
            }
            r.text = it->get<std::string>();
        }

        validate_review(r, line_no);
        ds.reviews.push_back(std::move(r));
    }
    return ds;
}

const std::vector<std::string> kCsvHeader = {"user_id", "item_id", "rating",
                                             "timestamp", "text"};

Dataset load_csv(std::string_view content) {
    auto rows = parse_csv(content);
    if (rows.empty()) {
        throw std::runtime_error("empty CSV file, expected a header row");
    }
    if (rows[0] != kCsvHeader) {
        throw std::runtime_error(
            "bad CSV header, expected user_id,item_id,rating,timestamp,text");
    }
    Dataset ds;
    ds.reviews.reserve(rows.size() - 1);
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const size_t line_no = i + 1;  // header is record 1
        if (row.size() != kCsvHeader.size()) {
            fail_line(line_no, "expected " +
                                   std::to_string(kCsvHeader.size()) +
                                   " fields, got " +
                                   std::to_string(row.size()));
        }
        Review r;
        r.review_id = make_review_id(ds.reviews.size());
        r.user_id = row[0];
        r.item_id = row[1];
        try {
            size_t used = 0;
            r.rating = std::stod(row[2], &used);
            if (used != row[2].size()) throw std::invalid_argument(row[2]);
        } catch (const std::exception&) {
            fail_line(line_no, "bad rating '" + row[2] + "'");
        }
        try {
            size_t used = 0;
            r.timestamp = std::stoll(row[3], &used);
            if (used != row[3].size()) throw std::invalid_argument(row[3]);
        } catch (const std::exception&) {
            fail_line(line_no, "bad timestamp '" + row[3] + "'");
        }
        r.text = row[4];
        validate_review(r, line_no);
        ds.reviews.push_back(std::move(r));
    }
    return ds;
}

std::string format_rating(double rating) {
    // Ratings are star counts; print without a trailing ".000000".
    double rounded = std::round(rating);
    if (rating == rounded) {
        return std::to_string(static_cast<long long>(rounded));
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", rating);
    return buf;
}

}  // namespace

bool parse_format(std::string_view name, ReviewFormat& out) {
    if (name == "amazon-json") {
        out = ReviewFormat::AmazonJson;
        return true;
    }
    if (name == "csv") {
        out = ReviewFormat::Csv;
        return true;
    }
    return false;
}

Dataset load_reviews_from_string(std::string_view content,
                                 ReviewFormat format) {
    switch (format) {
        case ReviewFormat::AmazonJson:
            return load_json_lines(content);
        case ReviewFormat::Csv:
            return load_csv(content);
    }
    throw std::logic_error("unknown review format");
}

Dataset load_reviews(const std::string& path, ReviewFormat format) {
    return load_reviews_from_string(read_text_file(path), format);
}

std::string reviews_to_csv(const Dataset& ds) {
    std::string out = csv_join(kCsvHeader) + "\n";
    for (const Review& r : ds.reviews) {
        out += csv_join({r.user_id, r.item_id, format_rating(r.rating),
                         std::to_string(r.timestamp), r.text});
        out.push_back('\n');
    }
    return out;
}

std::string reviews_to_json_lines(const Dataset& ds) {
    std::string out;
    for (const Review& r : ds.reviews) {
        json obj;
        obj["reviewerID"] = r.user_id;
        obj["asin"] = r.item_id;
        obj["overall"] = r.rating;
        obj["unixReviewTime"] = r.timestamp;
        obj["reviewText"] = r.text;
        out += obj.dump();
        out.push_back('\n');
    }
    return out;
}

void save_reviews(const std::string& path, const Dataset& ds,
                  ReviewFormat format) {
    switch (format) {
        case ReviewFormat::AmazonJson:
            write_text_file(path, reviews_to_json_lines(ds));
            return;
        case ReviewFormat::Csv:
            write_text_file(path, reviews_to_csv(ds));
            return;
    }
    throw std::logic_error("unknown review format");
}

SplitBundle temporal_split(const Dataset& ds, double train_frac,
                           double val_frac) {
    if (ds.empty()) {
        throw std::runtime_error("cannot split an empty dataset");
    }
    if (!(train_frac > 0.0) || !(val_frac >= 0.0) ||
        train_frac + val_frac >= 1.0 - 1e-12) {
        throw std::runtime_error("bad split fractions");
    }

    std::vector<size_t> order(ds.reviews.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const Review& ra = ds.reviews[a];
        const Review& rb = ds.reviews[b];
        if (ra.timestamp != rb.timestamp) return ra.timestamp < rb.timestamp;
        return ra.review_id < rb.review_id;
    });

    const size_t n = order.size();
    const size_t n_train = static_cast<size_t>(
        std::floor(train_frac * static_cast<double>(n)));
    const size_t n_val = static_cast<size_t>(
        std::floor(val_frac * static_cast<double>(n)));

    SplitBundle bundle;
    for (size_t i = 0; i < n; ++i) {
        const Review& r = ds.reviews[order[i]];
        if (i < n_train) {
            bundle.train.reviews.push_back(r);
        } else if (i < n_train + n_val) {
            bundle.validation.reviews.push_back(r);
        } else {
            bundle.test.reviews.push_back(r);
        }
    }
    return bundle;
}

DatasetStats dataset_stats(const Dataset& ds) {
    DatasetStats stats;
    if (ds.empty()) return stats;

    std::unordered_set<std::string> users;
    struct ItemAccum {
        size_t words = 0;
        size_t reviews = 0;
    };
    std::unordered_map<std::string, ItemAccum> items;
    size_t total_words = 0;

    for (const Review& r : ds.reviews) {
        size_t words = 0;
        for (const Token& tok : tokenize(r.text)) {
            if (!is_punct_surface(tok.surface)) ++words;
        }
        total_words += words;
        users.insert(r.user_id);
        ItemAccum& acc = items[r.item_id];
        acc.words += words;
        acc.reviews += 1;
    }

    stats.n_users = users.size();
    stats.n_items = items.size();
    stats.n_reviews = ds.reviews.size();
    stats.density = static_cast<double>(stats.n_reviews) /
                    (static_cast<double>(stats.n_users) *
                     static_cast<double>(stats.n_items));
    stats.words_per_review =
        static_cast<double>(total_words) / static_cast<double>(stats.n_reviews);
    stats.words_per_user =
        static_cast<double>(total_words) / static_cast<double>(stats.n_users);

    double item_mean_sum = 0.0;
    for (const auto& [item_id, acc] : items) {
        item_mean_sum += static_cast<double>(acc.words) /
                         static_cast<double>(acc.reviews);
    }
    stats.words_per_item = item_mean_sum / static_cast<double>(items.size());
    return stats;
}

}  // namespace minrev
