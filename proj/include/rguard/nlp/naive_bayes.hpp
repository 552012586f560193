#pragma once

#include <array>
#include <span>
#include <vector>

#include "rguard/nlp/label.hpp"

namespace rguard::nlp {

struct NbModel {
    std::array<double, kNumClasses> class_log_prior{};
    std::array<std::vector<double>, kNumClasses> feature_log_prob;
    double alpha = 1.0;

    std::size_t num_features() const { return feature_log_prob[0].size(); }
    bool operator==(const NbModel&) const = default;
};

struct Prediction {
    Label label = Label::Benign;
    std::array<double, kNumClasses> joint_log_likelihood{};
    std::array<double, kNumClasses> log_posterior{};

    /// log P(ransom | x) - log P(benign | x).
    double margin() const { return log_posterior[1] - log_posterior[0]; }
};

/// Multinomial NB with additive smoothing; fractional feature values are fine.
/// Throws std::invalid_argument on a single class, alpha <= 0 or ragged X.
NbModel fit_mnb(std::span<const std::vector<double>> X, std::span<const Label> y, double alpha = 1.0);

/// argmax of the joint log-likelihood; exact ties go to Benign.
Prediction predict(const NbModel& model, std::span<const double> x);

}  // namespace rguard::nlp
