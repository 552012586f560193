#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rguard/model_store.hpp"
#include "rguard/nlp/label.hpp"
#include "rguard/nlp/naive_bayes.hpp"
#include "rguard/verdict.hpp"

namespace rguard::nlp {

struct Document {
    std::string id;
    std::string text;
    std::optional<Label> label;
};

/// Reads `<root>/ransom/*` and `<root>/benign/*`; ids are "<class>/<file name>",
/// sorted. Throws std::runtime_error if either directory is missing.
std::vector<Document> load_corpus(const std::filesystem::path& root);

struct TrainConfig {
    double train_ratio = 0.7;
    std::uint64_t seed = 42;
    std::size_t k = kDefaultSelectK;
    double alpha = 1.0;
};

struct Metrics {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    // Set when the metric's denominator was zero; the value is then reported as 0.
    bool precision_undefined = false;
    bool recall_undefined = false;
    bool f1_undefined = false;

    std::uint64_t seed = 0;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::vector<double> cv_fold_scores;
    std::optional<double> cv_mean;

    bool operator==(const Metrics&) const = default;
};

/// Positive class is Ransom.
Metrics compute_metrics(std::span<const Label> truth, std::span<const Label> predicted);

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Per-class shuffle then cut at round(ratio * class size), clamped so each
/// side keeps at least one document of every class.
SplitIndices stratified_split(std::span<const Label> labels, double train_ratio, std::uint64_t seed);

/// Fold number of each document for stratified K-fold.
std::vector<std::size_t> stratified_folds(std::span<const Label> labels, std::size_t folds, std::uint64_t seed);

/// Fits vectorizer, selector and classifier on exactly `train`.
ModelBundle fit_bundle(std::span<const Document> train, const TrainConfig& config);

struct TrainResult {
    ModelBundle bundle;
    Metrics metrics;
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
};

/// Stratified split, fit on the training part, evaluate on the held-out part.
TrainResult train_pipeline(std::span<const Document> corpus, const TrainConfig& config = {});

struct CrossValidation {
    std::vector<double> fold_scores;
    double mean = 0.0;
    std::vector<std::size_t> fold_of;  // per document
};

/// Every fold refits the whole pipeline on the remaining folds.
CrossValidation cross_validate(std::span<const Document> corpus, std::size_t folds,
                               const TrainConfig& config = {});

Prediction classify_tokens(const ModelBundle& bundle, const TokenList& tokens);

inline constexpr std::size_t kDefaultMaxScanBytes = 16 * 1024;
inline constexpr std::size_t kMinClassifiableTokens = 5;

/// Text heuristic, tokenization and prediction over already-read content.
Verdict classify_content(const ModelBundle& bundle, std::string_view content);

/// Reads at most `max_scan_bytes` of `path` and classifies it.
Verdict classify_file(const ModelBundle& bundle, const std::filesystem::path& path,
                      std::size_t max_scan_bytes = kDefaultMaxScanBytes);

/// True if the bytes look like text: no NUL and < 10% invalid UTF-8.
bool looks_like_text(std::string_view content);

std::string metrics_table(const Metrics& m);
std::string metrics_json(const Metrics& m);

}  // namespace rguard::nlp
