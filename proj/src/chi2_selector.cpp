#include "rguard/nlp/chi2_selector.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace rguard::nlp {

std::vector<double> Chi2Selector::project(const SparseVector& x) const {
    std::vector<double> dense(selected.size(), 0.0);
    // Both sides are sorted by feature index.
    std::size_t j = 0;
    for (const auto& [idx, w] : x.entries) {
        while (j < selected.size() && selected[j] < idx) ++j;
        if (j == selected.size()) break;
        if (selected[j] == idx) dense[j] = w;
    }
    return dense;
}

std::vector<double> chi2_scores(std::span<const SparseVector> X, std::span<const Label> y,
                                std::size_t n_features) {
    if (X.size() != y.size()) throw std::invalid_argument("chi2: |X| != |y|");
    if (X.size() < 2) throw std::invalid_argument("chi2: need at least two samples");
    std::array<std::size_t, kNumClasses> class_docs{};
    for (auto l : y) ++class_docs[class_index(l)];
    if (class_docs[0] == 0 || class_docs[1] == 0)
        throw std::invalid_argument("chi2 undefined for one class");

    std::array<std::vector<double>, kNumClasses> observed;
    for (auto& o : observed) o.assign(n_features, 0.0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        auto& o = observed[class_index(y[i])];
        for (const auto& [idx, w] : X[i].entries) {
            if (idx >= n_features) throw std::invalid_argument("chi2: feature index out of range");
            if (w < 0.0) throw std::invalid_argument("chi2: negative feature value");
            o[idx] += w;
        }
    }

    const double n = static_cast<double>(X.size());
    std::vector<double> scores(n_features, 0.0);
    for (std::size_t f = 0; f < n_features; ++f) {
        const double total = observed[0][f] + observed[1][f];
        double s = 0.0;
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            const double expected = static_cast<double>(class_docs[c]) / n * total;
            if (expected == 0.0) continue;
            const double d = observed[c][f] - expected;
            s += d * d / expected;
        }
        scores[f] = s;
    }
    return scores;
}

Chi2Selector chi2_select(std::span<const SparseVector> X, std::span<const Label> y, std::size_t k,
                         std::size_t n_features) {
    Chi2Selector sel;
    sel.scores = chi2_scores(X, y, n_features);
    sel.k = std::min(k, n_features);

    std::vector<FeatureIndex> order(n_features);
    std::iota(order.begin(), order.end(), FeatureIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](FeatureIndex a, FeatureIndex b) {
        return sel.scores[a] > sel.scores[b];
    });
    sel.selected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(sel.k));
    std::sort(sel.selected.begin(), sel.selected.end());
    return sel;
}

}  // namespace rguard::nlp
