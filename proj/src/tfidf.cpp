#include "rguard/nlp/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace rguard::nlp {

double SparseVector::at(FeatureIndex i) const {
    const auto it = std::lower_bound(entries.begin(), entries.end(), i,
                                     [](const auto& e, FeatureIndex k) { return e.first < k; });
    return (it != entries.end() && it->first == i) ? it->second : 0.0;
}

double SparseVector::l2_norm() const {
    double sq = 0.0;
    for (const auto& [_, w] : entries) sq += w * w;
    return std::sqrt(sq);
}

std::optional<FeatureIndex> TfIdfModel::lookup(const std::string& token) const {
    const auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void TfIdfModel::reindex() {
    index_.clear();
    index_.reserve(vocabulary.size());
    for (FeatureIndex i = 0; i < vocabulary.size(); ++i) index_.emplace(vocabulary[i], i);
}

double smooth_idf(std::uint64_t doc_count, std::uint64_t doc_freq) {
    return std::log((1.0 + static_cast<double>(doc_count)) / (1.0 + static_cast<double>(doc_freq))) + 1.0;
}

TfIdfModel fit_tfidf(std::span<const TokenList> corpus) {
    if (corpus.empty()) throw std::invalid_argument("fit_tfidf: empty corpus");
    std::map<std::string, std::uint64_t> df;
    for (const auto& doc : corpus) {
        const std::set<std::string> distinct(doc.begin(), doc.end());
        for (const auto& t : distinct) ++df[t];
    }
    TfIdfModel m;
    m.doc_count = corpus.size();
    m.vocabulary.reserve(df.size());
    m.doc_freq.reserve(df.size());
    m.idf.reserve(df.size());
    for (const auto& [token, count] : df) {
        m.vocabulary.push_back(token);
        m.doc_freq.push_back(count);
        m.idf.push_back(smooth_idf(m.doc_count, count));
    }
    m.reindex();
    return m;
}

SparseVector transform(const TfIdfModel& model, const TokenList& tokens) {
    std::map<FeatureIndex, double> counts;
    for (const auto& t : tokens) {
        if (const auto idx = model.lookup(t)) counts[*idx] += 1.0;
    }
    SparseVector v;
    v.entries.reserve(counts.size());
    double sq = 0.0;
    for (const auto& [idx, c] : counts) {
        const double w = c * model.idf[idx];
        v.entries.emplace_back(idx, w);
        sq += w * w;
    }
    if (sq > 0.0) {
        const double norm = std::sqrt(sq);
        for (auto& [_, w] : v.entries) w /= norm;
    }
    return v;
}

}  // namespace rguard::nlp
