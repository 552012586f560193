#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rguard/nlp/label.hpp"
#include "rguard/nlp/tfidf.hpp"

namespace rguard::nlp {

inline constexpr std::size_t kDefaultSelectK = 400;

struct Chi2Selector {
    std::size_t k = 0;                   // effective k, capped at vocabulary size
    std::vector<FeatureIndex> selected;  // ascending feature indices
    std::vector<double> scores;          // one per vocabulary feature

    /// Dense vector over the selected features, in `selected` order.
    std::vector<double> project(const SparseVector& x) const;

    bool operator==(const Chi2Selector&) const = default;
};

/// Chi-squared statistic of each feature's class mass against the
/// class-proportional expectation. Throws std::invalid_argument unless both
/// classes are present and |X| == |y| >= 2.
std::vector<double> chi2_scores(std::span<const SparseVector> X, std::span<const Label> y,
                                std::size_t n_features);

/// Keeps the k highest-scoring features, ties to the lower index.
Chi2Selector chi2_select(std::span<const SparseVector> X, std::span<const Label> y, std::size_t k,
                         std::size_t n_features);

}  // namespace rguard::nlp
