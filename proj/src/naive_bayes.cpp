#include "rguard/nlp/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rguard::nlp {

NbModel fit_mnb(std::span<const std::vector<double>> X, std::span<const Label> y, double alpha) {
    if (X.size() != y.size()) throw std::invalid_argument("fit_mnb: |X| != |y|");
    if (!(alpha > 0.0)) throw std::invalid_argument("fit_mnb: alpha must be > 0");
    if (X.empty()) throw std::invalid_argument("fit_mnb: no samples");
    const std::size_t n_features = X.front().size();

    std::array<std::size_t, kNumClasses> docs{};
    std::array<std::vector<double>, kNumClasses> mass;
    for (auto& m : mass) m.assign(n_features, 0.0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X[i].size() != n_features) throw std::invalid_argument("fit_mnb: ragged feature matrix");
        const auto c = class_index(y[i]);
        ++docs[c];
        for (std::size_t f = 0; f < n_features; ++f) mass[c][f] += X[i][f];
    }
    if (docs[0] == 0 || docs[1] == 0) throw std::invalid_argument("fit_mnb: both classes required");

    NbModel m;
    m.alpha = alpha;
    const double total_docs = static_cast<double>(X.size());
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        m.class_log_prior[c] = std::log(static_cast<double>(docs[c]) / total_docs);
        double class_mass = 0.0;
        for (double v : mass[c]) class_mass += v;
        const double denom = class_mass + alpha * static_cast<double>(n_features);
        m.feature_log_prob[c].resize(n_features);
        for (std::size_t f = 0; f < n_features; ++f)
            m.feature_log_prob[c][f] = std::log((mass[c][f] + alpha) / denom);
    }
    return m;
}

Prediction predict(const NbModel& model, std::span<const double> x) {
    if (x.size() != model.num_features()) throw std::invalid_argument("predict: feature dimension mismatch");
    Prediction p;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        double jll = model.class_log_prior[c];
        for (std::size_t f = 0; f < x.size(); ++f) {
            if (x[f] != 0.0) jll += x[f] * model.feature_log_prob[c][f];
        }
        p.joint_log_likelihood[c] = jll;
    }
    const double hi = std::max(p.joint_log_likelihood[0], p.joint_log_likelihood[1]);
    const double lse = hi + std::log(std::exp(p.joint_log_likelihood[0] - hi) +
                                     std::exp(p.joint_log_likelihood[1] - hi));
    for (std::size_t c = 0; c < kNumClasses; ++c) p.log_posterior[c] = p.joint_log_likelihood[c] - lse;
    p.label = p.joint_log_likelihood[1] > p.joint_log_likelihood[0] ? Label::Ransom : Label::Benign;
    return p;
}

}  // namespace rguard::nlp
