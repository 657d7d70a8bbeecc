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

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "minrev/corpus.hpp"
#include "minrev/evaluate.hpp"
#include "minrev/io.hpp"
#include "minrev/kernels.hpp"
#include "minrev/lexicon.hpp"
#include "minrev/minimize.hpp"
#include "minrev/profiles.hpp"
#include "minrev/report.hpp"
#include "minrev/rng.hpp"
#include "minrev/scoring.hpp"
#include "minrev/tagger.hpp"

namespace {

using namespace minrev;

ReviewFormat format_from_name(const std::string& name) {
    ReviewFormat fmt;
    if (!parse_format(name, fmt)) {
        throw std::runtime_error("unknown format '" + name +
                                 "', expected amazon-json or csv");
    }
    return fmt;
}

Dataset load_nonempty(const std::string& path, const std::string& format) {
    Dataset ds = load_reviews(path, format_from_name(format));
    if (ds.empty()) {
        throw std::runtime_error("dataset has no reviews: " + path);
    }
    return ds;
}

std::unique_ptr<Tagger> make_tagger(const std::string& spec,
                                    const Dataset& ds) {
    if (spec == "builtin") {
        return std::make_unique<RuleTagger>();
    }
    if (spec.rfind("external:", 0) == 0) {
        std::vector<std::string> ids;
        ids.reserve(ds.reviews.size());
        for (const Review& r : ds.reviews) ids.push_back(r.review_id);
        return std::make_unique<SidecarTagger>(spec.substr(9), ids);
    }
    throw std::runtime_error("unknown tagger '" + spec +
                             "', expected builtin or external:<path>");
}

SensitiveLexicon make_lexicon(const std::string& spec) {
    if (spec == "default") return SensitiveLexicon::builtin();
    return SensitiveLexicon::from_file(spec);
}

// File stem without directory or .gz/.json/.csv extensions, used as the
// default dataset name in reports.
std::string dataset_name_from_path(const std::string& path) {
    std::string name = path;
    if (size_t slash = name.find_last_of('/');
        slash != std::string::npos) {
        name = name.substr(slash + 1);
    }
    for (const char* ext : {".gz", ".json", ".csv"}) {
        size_t len = std::string(ext).size();
        if (name.size() > len &&
            name.compare(name.size() - len, len, ext) == 0) {
            name = name.substr(0, name.size() - len);
        }
    }
    return name.empty() ? path : name;
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, v);
    return buf;
}

void write_meta_sidecar(const std::string& out_path,
                        const std::string& config, std::uint64_t seed) {
    std::string meta;
    meta += "config_hash=" + hex64(rng::Hasher().str(config).value()) + "\n";
    meta += "seed=" + std::to_string(seed) + "\n";
    meta += "config=" + config + "\n";
    write_text_file(out_path + ".meta", meta);
}

struct StatsArgs {
    std::string dataset;
    std::string format = "amazon-json";
};

int run_stats(const StatsArgs& args) {
    Dataset ds = load_nonempty(args.dataset, args.format);
    DatasetStats stats = dataset_stats(ds);
    std::printf("users              %zu\n", stats.n_users);
    std::printf("items              %zu\n", stats.n_items);
    std::printf("reviews            %zu\n", stats.n_reviews);
    std::printf("density            %.6f\n", stats.density);
    std::printf("words_per_review   %.2f\n", stats.words_per_review);
    std::printf("words_per_user     %.2f\n", stats.words_per_user);
    std::printf("words_per_item     %.2f\n", stats.words_per_item);
    return 0;
}

struct MinimizeArgs {
    std::string dataset;
    std::string format = "amazon-json";
    std::string out;
    std::string out_format;  // defaults to --format
    std::string strategy = "wordtype";
    std::string tagger = "builtin";
    std::string lexicon = "default";
    std::uint64_t seed = 42;
    bool print_removal = false;
};

int run_minimize(const MinimizeArgs& args) {
    Dataset ds = load_nonempty(args.dataset, args.format);
    Strategy strategy = parse_strategy(args.strategy);

    std::unique_ptr<Tagger> tagger = make_tagger(args.tagger, ds);
    SensitiveLexicon lexicon = make_lexicon(args.lexicon);
    MinimizeContext ctx;
    ctx.tagger = tagger.get();
    ctx.lexicon = &lexicon;
    ctx.seed = args.seed;

    if (args.print_removal) {
        std::printf("removal_fraction   %.4f\n",
                    removal_fraction(ds, strategy, ctx));
    }

    Dataset out = ds;
    for (Review& r : out.reviews) {
        r.text = minimize(r.text, strategy, r.review_id, ctx);
    }
    const std::string out_format =
        args.out_format.empty() ? args.format : args.out_format;
    save_reviews(args.out, out, format_from_name(out_format));

    std::string config = "cmd=minimize;dataset=" +
                         dataset_name_from_path(args.dataset) +
                         ";strategy=" + strategy.name() +
                         ";tagger=" + args.tagger +
                         ";lexicon=" + args.lexicon +
                         ";seed=" + std::to_string(args.seed);
    write_meta_sidecar(args.out, config, args.seed);
    return 0;
}

struct ProfilesArgs {
    std::string dataset;
    std::string format = "amazon-json";
    std::string out;
    std::string strategy = "unaltered";
    std::string tagger = "builtin";
    std::string lexicon = "default";
    std::string kernels = "auto";
    std::uint64_t seed = 42;
    unsigned threads = 0;
};

unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

int run_profiles(const ProfilesArgs& args) {
    kernels::set_active(kernels::parse_isa(args.kernels));
    Dataset ds = load_nonempty(args.dataset, args.format);
    Strategy strategy = parse_strategy(args.strategy);

    std::unique_ptr<Tagger> tagger = make_tagger(args.tagger, ds);
    SensitiveLexicon lexicon = make_lexicon(args.lexicon);
    MinimizeContext ctx;
    ctx.tagger = tagger.get();
    ctx.lexicon = &lexicon;
    ctx.seed = args.seed;

    ProfileSet profiles = ProfileSet::build(ds, strategy, ctx,
                                            effective_threads(args.threads));
    write_text_file(args.out, profiles.to_text());

    std::string config = "cmd=profiles;dataset=" +
                         dataset_name_from_path(args.dataset) +
                         ";strategy=" + strategy.name() +
                         ";tagger=" + args.tagger +
                         ";lexicon=" + args.lexicon +
                         ";seed=" + std::to_string(args.seed);
    write_meta_sidecar(args.out, config, args.seed);
    std::printf("items              %zu\n", profiles.items().size());
    std::printf("items_with_terms   %zu\n", profiles.items_with_terms());
    std::printf("vocabulary         %zu\n", profiles.vocabulary().size());
    return 0;
}

struct EvaluateArgs {
    std::string dataset;
    std::string format = "amazon-json";
    std::string name;  // defaults from the dataset path
    std::vector<std::string> strategies = {"unaltered", "wordtype",
                                           "random:0.5", "masking"};
    std::size_t k = 100;
    std::size_t cutoff = 10;
    std::uint64_t seed = 42;
    std::vector<double> split = {0.6, 0.2};
    std::string pool = "catalog";
    bool mrr_full_ranking = false;
    bool skip_cold_users = false;
    std::string tagger = "builtin";
    std::string lexicon = "default";
    std::string kernels = "auto";
    unsigned threads = 0;
    std::string out_csv;
    std::string out_markdown;
};

int run_evaluate(const EvaluateArgs& args) {
    kernels::set_active(kernels::parse_isa(args.kernels));
    Dataset ds = load_nonempty(args.dataset, args.format);
    if (args.split.size() != 2) {
        throw std::runtime_error(
            "--split needs two fractions, e.g. --split 0.6,0.2");
    }

    std::vector<Strategy> strategies;
    strategies.reserve(args.strategies.size());
    for (const std::string& s : args.strategies) {
        strategies.push_back(parse_strategy(s));
    }

    std::unique_ptr<Tagger> tagger = make_tagger(args.tagger, ds);
    SensitiveLexicon lexicon = make_lexicon(args.lexicon);
    MinimizeContext ctx;
    ctx.tagger = tagger.get();
    ctx.lexicon = &lexicon;
    ctx.seed = args.seed;

    const std::string name =
        args.name.empty() ? dataset_name_from_path(args.dataset) : args.name;
    const unsigned threads = effective_threads(args.threads);

    SplitBundle split = temporal_split(ds, args.split[0], args.split[1]);
    Histories histories = train_histories(split.train);

    EvalOptions options;
    options.k = args.k;
    options.cutoff = args.cutoff;
    options.seed = args.seed;
    options.mrr_full_ranking = args.mrr_full_ranking;
    options.skip_cold_users = args.skip_cold_users;
    options.threads = threads;

    std::vector<std::string> catalog = args.pool == "train"
                                           ? unique_items(split.train)
                                           : unique_items(ds);
    EvalCaseSet cases = build_cases(catalog, histories, split.test, options);

    std::fprintf(stderr,
                 "split train=%zu val=%zu test=%zu; cases=%zu skipped=%zu "
                 "users=%zu kernels=%s\n",
                 split.train.size(), split.validation.size(),
                 split.test.size(), cases.cases.size(), cases.skipped,
                 histories.size(), kernels::active().name);

    std::string strategy_names;
    for (const Strategy& s : strategies) {
        if (!strategy_names.empty()) strategy_names += ",";
        strategy_names += s.name();
    }
    std::string config =
        "cmd=evaluate;dataset=" + name + ";strategies=" + strategy_names +
        ";k=" + std::to_string(args.k) +
        ";cutoff=" + std::to_string(args.cutoff) +
        ";seed=" + std::to_string(args.seed) +
        ";split=" + std::to_string(args.split[0]) + "," +
        std::to_string(args.split[1]) + ";pool=" + args.pool +
        ";mrr_full=" + (args.mrr_full_ranking ? "1" : "0") +
        ";skip_cold=" + (args.skip_cold_users ? "1" : "0") +
        ";tagger=" + args.tagger + ";lexicon=" + args.lexicon;
    const std::uint64_t config_hash = rng::Hasher().str(config).value();

    std::vector<ReportRow> rows;
    for (const Strategy& strategy : strategies) {
        ProfileSet profiles =
            ProfileSet::build(split.train, strategy, ctx, threads);
        ContentScorer scorer(profiles);
        ReportRow row;
        row.dataset = name;
        row.strategy = strategy.name();
        row.result = evaluate(scorer, cases, histories, options);
        std::fprintf(stderr, "%-24s mrr=%.4f recall=%.4f hit_rate=%.4f\n",
                     row.strategy.c_str(), row.result.mrr, row.result.recall,
                     row.result.hit_rate);
        rows.push_back(std::move(row));
    }

    {
        MostPopScorer scorer(split.train);
        ReportRow row;
        row.dataset = name;
        row.strategy = scorer.name();
        row.result = evaluate(scorer, cases, histories, options);
        std::fprintf(stderr, "%-24s mrr=%.4f recall=%.4f hit_rate=%.4f\n",
                     row.strategy.c_str(), row.result.mrr, row.result.recall,
                     row.result.hit_rate);
        rows.push_back(std::move(row));
    }
    {
        RandomScorer scorer(args.seed);
        ReportRow row;
        row.dataset = name;
        row.strategy = scorer.name();
        row.result = evaluate(scorer, cases, histories, options);
        std::fprintf(stderr, "%-24s mrr=%.4f recall=%.4f hit_rate=%.4f\n",
                     row.strategy.c_str(), row.result.mrr, row.result.recall,
                     row.result.hit_rate);
        rows.push_back(std::move(row));
    }

    std::string markdown = report_markdown(rows, args.cutoff);
    markdown += "\nconfig_hash=" + hex64(config_hash) +
                " seed=" + std::to_string(args.seed) + "\n";
    std::fputs(markdown.c_str(), stdout);

    if (!args.out_csv.empty()) {
        write_text_file(args.out_csv,
                        report_csv(rows, config_hash, args.seed));
    }
    if (!args.out_markdown.empty()) {
        write_text_file(args.out_markdown, markdown);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"review minimization and its impact on a content-based "
                 "recommender"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "dataset statistics");
    stats->add_option("--dataset", stats_args.dataset, "review file")
        ->required();
    stats->add_option("--format", stats_args.format,
                      "amazon-json or csv (gzip handled transparently)");

    MinimizeArgs min_args;
    CLI::App* minimize =
        app.add_subcommand("minimize", "apply a minimization strategy");
    minimize->add_option("--dataset", min_args.dataset, "review file")
        ->required();
    minimize->add_option("--format", min_args.format, "amazon-json or csv");
    minimize->add_option("--out", min_args.out, "output review file")
        ->required();
    minimize->add_option("--out-format", min_args.out_format,
                         "output format, defaults to --format");
    minimize->add_option("--strategy", min_args.strategy,
                         "unaltered | wordtype[:TAGS] | random[:p] | "
                         "keeponly:TAGS | masking");
    minimize->add_option("--tagger", min_args.tagger,
                         "builtin or external:<sidecar file>");
    minimize->add_option("--lexicon", min_args.lexicon,
                         "default or a lexicon file path");
    minimize->add_option("--seed", min_args.seed, "random removal seed");
    minimize->add_flag("--print-removal", min_args.print_removal,
                       "print the fraction of words removed");

    ProfilesArgs prof_args;
    CLI::App* profiles =
        app.add_subcommand("profiles", "export tf-idf item profiles");
    profiles->add_option("--dataset", prof_args.dataset, "review file")
        ->required();
    profiles->add_option("--format", prof_args.format, "amazon-json or csv");
    profiles->add_option("--out", prof_args.out, "output profile file")
        ->required();
    profiles->add_option("--strategy", prof_args.strategy,
                         "minimization applied before profile building");
    profiles->add_option("--tagger", prof_args.tagger,
                         "builtin or external:<sidecar file>");
    profiles->add_option("--lexicon", prof_args.lexicon,
                         "default or a lexicon file path");
    profiles->add_option("--kernels", prof_args.kernels,
                         "auto | scalar | avx2 | neon");
    profiles->add_option("--seed", prof_args.seed, "random removal seed");
    profiles->add_option("--threads", prof_args.threads,
                         "0 = all hardware threads");

    EvaluateArgs eval_args;
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "one-plus-random evaluation of "
                                       "minimization strategies");
    evaluate->add_option("--dataset", eval_args.dataset, "review file")
        ->required();
    evaluate->add_option("--format", eval_args.format, "amazon-json or csv");
    evaluate->add_option("--name", eval_args.name,
                         "dataset label in reports, defaults from the path");
    evaluate
        ->add_option("--strategies", eval_args.strategies,
                     "comma-separated strategy list")
        ->delimiter(',');
    evaluate->add_option("--k", eval_args.k, "random candidates per case");
    evaluate->add_option("--cutoff", eval_args.cutoff,
                         "N for Recall@N and HitRate@N");
    evaluate->add_option("--seed", eval_args.seed, "global seed");
    evaluate
        ->add_option("--split", eval_args.split,
                     "train,validation fractions; test gets the rest")
        ->delimiter(',');
    evaluate
        ->add_option("--pool", eval_args.pool,
                     "candidate pool: whole catalog or train items only")
        ->check(CLI::IsMember({"catalog", "train"}));
    evaluate->add_flag("--mrr-full-ranking", eval_args.mrr_full_ranking,
                       "MRR over the full ranking instead of top cutoff");
    evaluate->add_flag("--skip-cold-users", eval_args.skip_cold_users,
                       "drop test interactions of users without history");
    evaluate->add_option("--tagger", eval_args.tagger,
                         "builtin or external:<sidecar file>");
    evaluate->add_option("--lexicon", eval_args.lexicon,
                         "default or a lexicon file path");
    evaluate->add_option("--kernels", eval_args.kernels,
                         "auto | scalar | avx2 | neon");
    evaluate->add_option("--threads", eval_args.threads,
                         "0 = all hardware threads");
    evaluate->add_option("--out", eval_args.out_csv, "write a CSV report");
    evaluate->add_option("--markdown", eval_args.out_markdown,
                         "write the markdown report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return run_stats(stats_args);
        if (minimize->parsed()) return run_minimize(min_args);
        if (profiles->parsed()) return run_profiles(prof_args);
        if (evaluate->parsed()) return run_evaluate(eval_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
