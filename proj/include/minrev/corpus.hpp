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
#include <string_view>
#include <vector>

namespace minrev {

struct Review {
    std::string review_id;  // assigned by the loader, stable per file
    std::string user_id;
    std::string item_id;
    double rating = 0.0;     // 1 to 5
    int64_t timestamp = 0;   // unix seconds
    std::string text;        // may be empty
};

struct Dataset {
    std::vector<Review> reviews;

    size_t size() const { return reviews.size(); }
    bool empty() const { return reviews.empty(); }
};

enum class ReviewFormat {
    AmazonJson,  // one JSON object per line: reviewerID, asin, overall,
                 // unixReviewTime, reviewText (other keys ignored)
    Csv,         // header: user_id,item_id,rating,timestamp,text
};

// Returns false when the name is not a known format.
bool parse_format(std::string_view name, ReviewFormat& out);

// Loads a review file, transparently decompressing gzip. Review ids are
// zero-padded decimal record ordinals ("00000000", "00000001", ...).
Dataset load_reviews(const std::string& path, ReviewFormat format);
Dataset load_reviews_from_string(std::string_view content,
                                 ReviewFormat format);

std::string reviews_to_csv(const Dataset& ds);
std::string reviews_to_json_lines(const Dataset& ds);
void save_reviews(const std::string& path, const Dataset& ds,
                  ReviewFormat format);

struct SplitBundle {
    Dataset train;
    Dataset validation;
    Dataset test;
};

// Orders reviews by (timestamp, review_id) ascending and cuts the sorted
// sequence into floor(train_frac*n), floor(val_frac*n), and the remainder.
// Throws on an empty dataset or fractions outside (0,1) / [0,1) that do
// not leave room for a test set.
SplitBundle temporal_split(const Dataset& ds, double train_frac = 0.6,
                           double val_frac = 0.2);

struct DatasetStats {
    size_t n_users = 0;
    size_t n_items = 0;
    size_t n_reviews = 0;
    double density = 0.0;           // reviews / (users * items)
    double words_per_review = 0.0;  // total words / reviews
    double words_per_user = 0.0;    // total words / users
    double words_per_item = 0.0;    // mean over items of that item's
                                    // average words per review
};

// A word is a non-punctuation token.
DatasetStats dataset_stats(const Dataset& ds);

}  // namespace minrev
