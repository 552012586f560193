#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rguard/nlp/chi2_selector.hpp"
#include "rguard/nlp/naive_bayes.hpp"
#include "rguard/nlp/tfidf.hpp"
#include "test_support.hpp"

using namespace rguard;
using namespace rguard::nlp;
namespace t = rguard::testing;

// ---------------------------------------------------------------- tf-idf

TEST(TfIdf, SmoothIdfValues) {
    EXPECT_DOUBLE_EQ(smooth_idf(7, 7), 1.0);
    EXPECT_DOUBLE_EQ(smooth_idf(1, 1), 1.0);
    EXPECT_NEAR(smooth_idf(4, 1), std::log(5.0 / 2.0) + 1.0, 1e-15);
    EXPECT_NEAR(smooth_idf(4, 1), 1.9163, 1e-4);
}

TEST(TfIdf, FitUsesOnlyGivenDocuments) {
    const std::vector<TokenList> docs = {{"b", "a", "a"}, {"c", "a"}, {"d"}};
    const auto m = fit_tfidf(docs);
    EXPECT_EQ(m.vocabulary, (std::vector<std::string>{"a", "b", "c", "d"}));
    EXPECT_EQ(m.doc_freq, (std::vector<std::uint64_t>{2, 1, 1, 1}));
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_DOUBLE_EQ(m.idf[i], smooth_idf(3, m.doc_freq[i]));
    EXPECT_FALSE(m.lookup("zzz"));
    EXPECT_THROW(fit_tfidf(std::vector<TokenList>{}), std::invalid_argument);
}

TEST(TfIdf, OutOfVocabularyIsZeroVector) {
    const auto m = fit_tfidf(std::vector<TokenList>{{"a"}});
    EXPECT_TRUE(transform(m, {"x", "y"}).empty());
}

TEST(TfIdf, SingleTokenIsUnitCoordinate) {
    const auto m = fit_tfidf(std::vector<TokenList>{{"a", "b"}, {"b"}});
    const auto v = transform(m, {"a"});
    ASSERT_EQ(v.entries.size(), 1u);
    EXPECT_DOUBLE_EQ(v.entries[0].second, 1.0);
}

TEST(TfIdf, EqualWeightsAreOneOverRootTwo) {
    const auto m = fit_tfidf(std::vector<TokenList>{{"a", "b"}});
    const auto v = transform(m, {"a", "b"});
    ASSERT_EQ(v.entries.size(), 2u);
    EXPECT_NEAR(v.entries[0].second, 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(v.entries[1].second, 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(TfIdf, NonzeroVectorsHaveUnitNorm) {
    DeterministicRng rng(4);
    for (int round = 0; round < 300; ++round) {
        std::vector<TokenList> docs(rng.between(1, 6));
        for (auto& d : docs)
            for (auto n = rng.between(0, 12); n > 0; --n) d.push_back(std::string(1, static_cast<char>('a' + rng.below(10))));
        if (std::all_of(docs.begin(), docs.end(), [](const TokenList& d) { return d.empty(); })) docs[0].push_back("a");
        const auto m = fit_tfidf(docs);
        for (const auto& d : docs) {
            const auto v = transform(m, d);
            if (!v.empty()) ASSERT_NEAR(v.l2_norm(), 1.0, 1e-9);
        }
    }
}

// ---------------------------------------------------------------- chi2

TEST(Chi2, RansomOnlyFeatureOutscoresUniformFeature) {
    // Features: 0 only in ransom docs, 1 equally everywhere.
    const std::vector<std::vector<double>> X = {{1, 1}, {1, 1}, {0, 1}, {0, 1}};
    const std::vector<Label> y = {Label::Ransom, Label::Ransom, Label::Benign, Label::Benign};
    std::vector<SparseVector> sx;
    for (const auto& r : X) sx.push_back(t::sparsify(r));
    const auto s = chi2_scores(sx, y, 2);
    const auto o = t::oracle_chi2(X, y);
    EXPECT_GT(s[0], s[1]);
    EXPECT_NEAR(s[0], o[0], 1e-12);
    EXPECT_EQ(s[1], 0.0);
}

TEST(Chi2, ProportionalMassScoresZero) {
    const std::vector<std::vector<double>> X = {{2}, {3}, {1}};
    const std::vector<Label> y = {Label::Ransom, Label::Benign, Label::Benign};
    std::vector<SparseVector> sx;
    for (const auto& r : X) sx.push_back(t::sparsify(r));
    EXPECT_NEAR(chi2_scores(sx, y, 1)[0], 0.0, 1e-15);
}

TEST(Chi2, KAtLeastVocabularyKeepsAllInIndexOrder) {
    std::vector<SparseVector> sx = {t::sparsify({3, 0, 1}), t::sparsify({0, 2, 1})};
    const std::vector<Label> y = {Label::Ransom, Label::Benign};
    const auto sel = chi2_select(sx, y, 10, 3);
    EXPECT_EQ(sel.k, 3u);
    EXPECT_EQ(sel.selected, (std::vector<FeatureIndex>{0, 1, 2}));
}

TEST(Chi2, SingleClassRejected) {
    std::vector<SparseVector> sx = {t::sparsify({1}), t::sparsify({2})};
    const std::vector<Label> y = {Label::Ransom, Label::Ransom};
    EXPECT_THROW(chi2_scores(sx, y, 1), std::invalid_argument);
}

TEST(Chi2, TiesGoToLowerIndex) {
    std::vector<SparseVector> sx = {t::sparsify({1, 1, 0}), t::sparsify({0, 0, 1})};
    const std::vector<Label> y = {Label::Ransom, Label::Benign};
    const auto sel = chi2_select(sx, y, 1, 3);
    EXPECT_EQ(sel.selected, (std::vector<FeatureIndex>{0}));
}

TEST(Chi2, MatchesBruteForceOnRandomInstances) {
    DeterministicRng rng(1234);
    for (int round = 0; round < 1000; ++round) {
        const auto inst = t::random_instance(rng, 6, 10);
        const std::size_t F = inst.X[0].size();
        std::vector<SparseVector> sx;
        for (const auto& r : inst.X) sx.push_back(t::sparsify(r));
        const auto k = static_cast<std::size_t>(rng.between(1, F + 2));
        const auto sel = chi2_select(sx, inst.y, k, F);
        const auto oracle = t::oracle_chi2(inst.X, inst.y);
        for (std::size_t f = 0; f < F; ++f) ASSERT_NEAR(sel.scores[f], oracle[f], 1e-9) << round;
        ASSERT_EQ(sel.selected, t::oracle_select(sel.scores, k)) << round;
    }
}

// ---------------------------------------------------------------- naive bayes

TEST(NaiveBayes, BalancedPriorsAreLogHalf) {
    const std::vector<std::vector<double>> X = {{1, 0}, {0, 1}};
    const auto m = fit_mnb(X, std::vector<Label>{Label::Benign, Label::Ransom});
    EXPECT_DOUBLE_EQ(m.class_log_prior[0], std::log(0.5));
    EXPECT_DOUBLE_EQ(m.class_log_prior[1], std::log(0.5));
}

TEST(NaiveBayes, HandComputedLikelihoods) {
    // Ransom mass (3, 1), benign mass (0, 2), alpha 1.
    const std::vector<std::vector<double>> X = {{3, 1}, {0, 2}};
    const auto m = fit_mnb(X, std::vector<Label>{Label::Ransom, Label::Benign}, 1.0);
    EXPECT_NEAR(m.feature_log_prob[1][0], std::log(4.0 / 6.0), 1e-12);
    EXPECT_NEAR(m.feature_log_prob[1][1], std::log(2.0 / 6.0), 1e-12);
    EXPECT_NEAR(m.feature_log_prob[0][0], std::log(1.0 / 4.0), 1e-12);
    EXPECT_NEAR(m.feature_log_prob[0][1], std::log(3.0 / 4.0), 1e-12);
}

TEST(NaiveBayes, ZeroMassClassIsUniform) {
    const std::vector<std::vector<double>> X = {{0, 0, 0}, {1, 2, 3}};
    const auto m = fit_mnb(X, std::vector<Label>{Label::Benign, Label::Ransom}, 1.0);
    for (double v : m.feature_log_prob[0]) EXPECT_NEAR(v, -std::log(3.0), 1e-12);
}

TEST(NaiveBayes, ZeroVectorFollowsPriorsWithBenignTieBreak) {
    const std::vector<std::vector<double>> balanced = {{1, 0}, {0, 1}};
    const auto m = fit_mnb(balanced, std::vector<Label>{Label::Benign, Label::Ransom});
    EXPECT_EQ(predict(m, std::vector<double>{0, 0}).label, Label::Benign);
    const std::vector<std::vector<double>> skewed = {{1, 0}, {0, 1}, {0, 2}};
    const auto m2 = fit_mnb(skewed, std::vector<Label>{Label::Benign, Label::Ransom, Label::Ransom});
    EXPECT_EQ(predict(m2, std::vector<double>{0, 0}).label, Label::Ransom);
}

TEST(NaiveBayes, RansomHeavyFeatureWins) {
    const std::vector<std::vector<double>> X = {{5, 0}, {4, 1}, {0, 3}, {1, 4}};
    const auto m = fit_mnb(X, std::vector<Label>{Label::Ransom, Label::Ransom, Label::Benign, Label::Benign});
    const auto p = predict(m, std::vector<double>{2, 0});
    EXPECT_EQ(p.label, Label::Ransom);
    EXPECT_GT(p.margin(), 0.0);
}

TEST(NaiveBayes, ExhaustiveBinaryVectorsOfFourFeatureModel) {
    const std::vector<std::vector<double>> X = {{2, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 3}, {0, 2, 0, 1}, {0, 1, 1, 1}};
    const std::vector<Label> y = {Label::Ransom, Label::Ransom, Label::Benign, Label::Benign, Label::Benign};
    const auto m = fit_mnb(X, y, 1.0);
    const auto o = t::oracle_fit_nb(X, y, 1.0);
    for (int bits = 0; bits < 16; ++bits) {
        std::vector<double> x(4);
        for (int f = 0; f < 4; ++f) x[f] = (bits >> f) & 1;
        const auto p = predict(m, x);
        const auto post = t::oracle_posterior(o, x);
        EXPECT_NEAR(p.log_posterior[0], std::log(post[0]), 1e-9) << bits;
        EXPECT_NEAR(p.log_posterior[1], std::log(post[1]), 1e-9) << bits;
        EXPECT_EQ(p.label, post[1] > post[0] ? Label::Ransom : Label::Benign) << bits;
    }
}

TEST(NaiveBayes, MatchesDirectFormulaOnRandomInstances) {
    DeterministicRng rng(4321);
    for (int round = 0; round < 1000; ++round) {
        const auto inst = t::random_instance(rng, 6, 10);
        const double alpha = rng.below(2) == 0 ? 1.0 : 0.1 + rng.unit();
        const auto m = fit_mnb(inst.X, inst.y, alpha);
        const auto o = t::oracle_fit_nb(inst.X, inst.y, alpha);
        for (int c = 0; c < 2; ++c) {
            ASSERT_NEAR(m.class_log_prior[c], std::log(o.prior[c]), 1e-9);
            double sum = 0;
            for (std::size_t f = 0; f < o.theta[c].size(); ++f) {
                ASSERT_NEAR(m.feature_log_prob[c][f], std::log(o.theta[c][f]), 1e-9);
                sum += std::exp(m.feature_log_prob[c][f]);
            }
            ASSERT_NEAR(sum, 1.0, 1e-9);
        }
        std::vector<double> x(inst.X[0].size());
        for (auto& v : x) v = rng.below(2) == 0 ? 0.0 : rng.unit() * 3.0;
        const auto p = predict(m, x);
        const auto post = t::oracle_posterior(o, x);
        ASSERT_NEAR(p.log_posterior[0], std::log(post[0]), 1e-9) << round;
        ASSERT_NEAR(p.log_posterior[1], std::log(post[1]), 1e-9) << round;
        if (std::abs(post[1] - post[0]) > 1e-12) ASSERT_EQ(p.label, post[1] > post[0] ? Label::Ransom : Label::Benign);
    }
}

TEST(NaiveBayes, RejectsBadInput) {
    const std::vector<std::vector<double>> X = {{1}, {2}};
    EXPECT_THROW(fit_mnb(X, std::vector<Label>{Label::Ransom, Label::Ransom}), std::invalid_argument);
    EXPECT_THROW(fit_mnb(X, std::vector<Label>{Label::Ransom, Label::Benign}, 0.0), std::invalid_argument);
    const std::vector<std::vector<double>> ragged = {{1}, {2, 3}};
    EXPECT_THROW(fit_mnb(ragged, std::vector<Label>{Label::Ransom, Label::Benign}), std::invalid_argument);
}
