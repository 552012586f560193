#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rguard/nlp/text_preprocess.hpp"

namespace rguard::nlp {

using FeatureIndex = std::uint32_t;

/// Sorted (index, weight) pairs with weight > 0.
struct SparseVector {
    std::vector<std::pair<FeatureIndex, double>> entries;

    double at(FeatureIndex i) const;
    double l2_norm() const;
    bool empty() const { return entries.empty(); }
    bool operator==(const SparseVector&) const = default;
};

struct TfIdfModel {
    std::vector<std::string> vocabulary;  // feature index -> token, lexicographic
    std::uint64_t doc_count = 0;
    std::vector<std::uint64_t> doc_freq;
    std::vector<double> idf;

    std::size_t size() const { return vocabulary.size(); }
    std::optional<FeatureIndex> lookup(const std::string& token) const;

    /// Rebuilds the token index; call after filling vocabulary by hand.
    void reindex();

    bool operator==(const TfIdfModel& o) const {
        return vocabulary == o.vocabulary && doc_count == o.doc_count && doc_freq == o.doc_freq &&
               idf == o.idf;
    }

private:
    std::unordered_map<std::string, FeatureIndex> index_;
};

/// Smooth idf: ln((1 + N) / (1 + df)) + 1.
double smooth_idf(std::uint64_t doc_count, std::uint64_t doc_freq);

/// Throws std::invalid_argument on an empty corpus.
TfIdfModel fit_tfidf(std::span<const TokenList> corpus);

/// Raw counts times idf, L2-normalized. Out-of-vocabulary tokens are ignored.
SparseVector transform(const TfIdfModel& model, const TokenList& tokens);

}  // namespace rguard::nlp
