#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rguard/nlp/pipeline.hpp"
#include "rguard/nlp/text_preprocess.hpp"
#include "test_support.hpp"

using namespace rguard;
using namespace rguard::nlp;
namespace t = rguard::testing;

namespace {

const std::vector<std::string> kRansomWords = {"encrypt", "bitcoin", "decrypt", "payment", "ransom", "key",
                                               "locked", "recover", "deadline", "wallet"};
const std::vector<std::string> kBenignWords = {"meeting", "agenda", "recipe", "garden", "invoice", "travel",
                                               "project", "weather", "holiday", "schedule"};

// Two classes drawn from disjoint word pools; any sane classifier separates them.
std::vector<Document> separable_corpus(std::size_t per_class, std::uint64_t seed) {
    DeterministicRng rng(seed);
    std::vector<Document> docs;
    for (std::size_t i = 0; i < per_class * 2; ++i) {
        const bool ransom = i % 2 == 0;
        std::string text;
        for (int w = 0; w < 12; ++w) text += rng.pick(ransom ? kRansomWords : kBenignWords) + " ";
        docs.push_back({(ransom ? "ransom/" : "benign/") + std::to_string(i), text,
                        ransom ? Label::Ransom : Label::Benign});
    }
    return docs;
}

std::vector<Label> labels(std::size_t ransom, std::size_t benign) {
    std::vector<Label> y(ransom, Label::Ransom);
    y.insert(y.end(), benign, Label::Benign);
    return y;
}

}  // namespace

TEST(Split, HundredPerClassAtSeventyPercent) {
    const auto y = labels(100, 100);
    const auto s = stratified_split(y, 0.7, 42);
    std::size_t train_ransom = 0, test_ransom = 0;
    for (auto i : s.train) train_ransom += y[i] == Label::Ransom;
    for (auto i : s.test) test_ransom += y[i] == Label::Ransom;
    EXPECT_EQ(s.train.size(), 140u);
    EXPECT_EQ(s.test.size(), 60u);
    EXPECT_EQ(train_ransom, 70u);
    EXPECT_EQ(test_ransom, 30u);
}

TEST(Split, PartitionIsDisjointCoveringAndDeterministic) {
    DeterministicRng rng(3);
    for (int round = 0; round < 100; ++round) {
        const auto y = labels(rng.between(2, 40), rng.between(2, 40));
        const double ratio = 0.05 + 0.9 * rng.unit();
        const auto s = stratified_split(y, ratio, round);
        std::set<std::size_t> all(s.train.begin(), s.train.end());
        for (auto i : s.test) ASSERT_TRUE(all.insert(i).second);
        ASSERT_EQ(all.size(), y.size());
        for (Label c : {Label::Ransom, Label::Benign}) {
            ASSERT_TRUE(std::any_of(s.train.begin(), s.train.end(), [&](auto i) { return y[i] == c; }));
            ASSERT_TRUE(std::any_of(s.test.begin(), s.test.end(), [&](auto i) { return y[i] == c; }));
        }
        const auto again = stratified_split(y, ratio, round);
        ASSERT_EQ(again.train, s.train);
        ASSERT_EQ(again.test, s.test);
    }
}

TEST(Split, RejectsBadRatioAndTinyClass) {
    EXPECT_THROW(stratified_split(labels(5, 5), 1.0, 1), std::invalid_argument);
    EXPECT_THROW(stratified_split(labels(1, 5), 0.5, 1), std::invalid_argument);
}

TEST(Folds, BalancedPerClassAndDeterministic) {
    const auto y = labels(23, 31);
    const auto f = stratified_folds(y, 5, 9);
    EXPECT_EQ(f, stratified_folds(y, 5, 9));
    for (Label c : {Label::Ransom, Label::Benign}) {
        std::vector<std::size_t> per(5, 0);
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i] == c) ++per[f[i]];
        const auto [lo, hi] = std::minmax_element(per.begin(), per.end());
        EXPECT_LE(*hi - *lo, 1u);
    }
    EXPECT_THROW(stratified_folds(labels(3, 30), 4, 1), std::invalid_argument);
}

TEST(Metrics, HandCountedConfusion) {
    const std::vector<Label> truth = {Label::Ransom, Label::Ransom, Label::Ransom, Label::Benign, Label::Benign};
    const std::vector<Label> pred = {Label::Ransom, Label::Ransom, Label::Benign, Label::Ransom, Label::Benign};
    const auto m = compute_metrics(truth, pred);
    EXPECT_EQ(m.tp, 2u);
    EXPECT_EQ(m.fn, 1u);
    EXPECT_EQ(m.fp, 1u);
    EXPECT_EQ(m.tn, 1u);
    EXPECT_DOUBLE_EQ(m.accuracy, 3.0 / 5.0);
    EXPECT_DOUBLE_EQ(m.precision, 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(m.recall, 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(m.f1, 2.0 / 3.0);
}

TEST(Metrics, NoPredictedPositivesFlagsUndefinedPrecision) {
    const std::vector<Label> truth = {Label::Ransom, Label::Benign};
    const std::vector<Label> pred = {Label::Benign, Label::Benign};
    const auto m = compute_metrics(truth, pred);
    EXPECT_TRUE(m.precision_undefined);
    EXPECT_EQ(m.precision, 0.0);
    EXPECT_FALSE(m.recall_undefined);
    EXPECT_EQ(m.recall, 0.0);
    EXPECT_TRUE(m.f1_undefined);
}

TEST(Metrics, IdentitiesOnRandomLabelings) {
    DeterministicRng rng(17);
    for (int round = 0; round < 500; ++round) {
        std::vector<Label> truth, pred;
        for (auto n = rng.between(1, 30); n > 0; --n) {
            truth.push_back(rng.below(2) ? Label::Ransom : Label::Benign);
            pred.push_back(rng.below(2) ? Label::Ransom : Label::Benign);
        }
        const auto m = compute_metrics(truth, pred);
        ASSERT_EQ(m.tp + m.fp + m.tn + m.fn, truth.size());
        ASSERT_NEAR(m.accuracy, static_cast<double>(m.tp + m.tn) / truth.size(), 1e-15);
        if (!m.f1_undefined && m.precision + m.recall > 0)
            ASSERT_NEAR(m.f1, 2 * m.precision * m.recall / (m.precision + m.recall), 1e-12);
        ASSERT_GE(m.f1, 0.0);
        ASSERT_LE(m.f1, 1.0);
    }
}

TEST(Pipeline, TrainingIsDeterministic) {
    const auto corpus = separable_corpus(30, 5);
    const auto a = train_pipeline(corpus, {.seed = 11});
    const auto b = train_pipeline(corpus, {.seed = 11});
    EXPECT_EQ(a.bundle, b.bundle);
    EXPECT_EQ(a.metrics, b.metrics);
    EXPECT_EQ(serialize_bundle(a.bundle), serialize_bundle(b.bundle));
}

// Tokens that appear only in held-out documents must not reach the fitted
// vocabulary, or the evaluation would be leaking test data.
TEST(Pipeline, HeldOutTokensNeverEnterTheVocabulary) {
    auto corpus = separable_corpus(30, 6);
    for (std::size_t i = 0; i < corpus.size(); ++i) corpus[i].text += " zqxpoison" + std::to_string(i);
    const auto r = train_pipeline(corpus, {.seed = 3});
    std::set<std::string> test_ids(r.test_ids.begin(), r.test_ids.end());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto tok = preprocess("zqxpoison" + std::to_string(i));
        ASSERT_EQ(tok.size(), 1u);
        EXPECT_EQ(r.bundle.tfidf.lookup(tok[0]).has_value(), !test_ids.count(corpus[i].id)) << corpus[i].id;
    }
    EXPECT_EQ(r.bundle.tfidf.doc_count, r.train_ids.size());
}

TEST(Pipeline, SeparableCorpusScoresPerfectly) {
    const auto corpus = separable_corpus(20, 8);
    const auto r = train_pipeline(corpus, {.seed = 1});
    EXPECT_EQ(r.metrics.accuracy, 1.0);
    const auto cv = cross_validate(corpus, 10, {.seed = 1});
    EXPECT_EQ(cv.fold_scores.size(), 10u);
    EXPECT_EQ(cv.mean, 1.0);
    EXPECT_EQ(cv.fold_of, cross_validate(corpus, 10, {.seed = 1}).fold_of);
}

TEST(Pipeline, SmallKKeepsOnlyKFeatures) {
    const auto r = train_pipeline(separable_corpus(20, 2), {.seed = 4, .k = 3});
    EXPECT_EQ(r.bundle.selector.selected.size(), 3u);
    EXPECT_EQ(r.bundle.nb.num_features(), 3u);
}

TEST(Classify, BinaryContentIsNotText) {
    const auto bundle = train_pipeline(separable_corpus(20, 1), {.seed = 1}).bundle;
    std::string elf = "\x7f" "ELF";
    elf.push_back('\0');
    elf += "encrypt bitcoin decrypt payment ransom";
    EXPECT_EQ(classify_content(bundle, elf), Verdict::indeterminate("not text"));
    EXPECT_EQ(classify_content(bundle, "encrypt bitcoin"), Verdict::indeterminate("too few tokens"));
    const auto v = classify_content(bundle, "encrypt bitcoin decrypt payment ransom wallet deadline");
    EXPECT_EQ(v.kind, VerdictKind::RansomNote);
    ASSERT_TRUE(v.margin);
    EXPECT_GT(*v.margin, 0.0);
}

TEST(Classify, TextHeuristic) {
    EXPECT_TRUE(looks_like_text(""));
    EXPECT_TRUE(looks_like_text("plain ascii\n"));
    EXPECT_TRUE(looks_like_text("Sus archivos están cifrados"));
    EXPECT_FALSE(looks_like_text(std::string("a\0b", 3)));
    EXPECT_FALSE(looks_like_text("\xff\xfe\xfd\xfc abc"));
}

TEST(Classify, UnreadableFile) {
    const auto bundle = train_pipeline(separable_corpus(20, 1), {.seed = 1}).bundle;
    EXPECT_EQ(classify_file(bundle, "/nonexistent/file.txt"), Verdict::indeterminate("unreadable"));
}

TEST(Classify, ReadsAtMostMaxScanBytes) {
    t::TempDir dir;
    const auto bundle = train_pipeline(separable_corpus(20, 1), {.seed = 1}).bundle;
    // Benign prose up front, ransom vocabulary only past the scan window.
    std::string text;
    while (text.size() < 2000) text += "meeting agenda recipe garden invoice travel ";
    text += std::string(10, '\n');
    for (int i = 0; i < 200; ++i) text += "encrypt bitcoin decrypt payment ransom ";
    t::write_file(dir / "f.txt", text);
    EXPECT_EQ(classify_file(bundle, dir / "f.txt", 1000).kind, VerdictKind::Benign);
    EXPECT_EQ(classify_file(bundle, dir / "f.txt", text.size()).kind, VerdictKind::RansomNote);
}

TEST(Corpus, ShippedCorpusLoadsSorted) {
    const auto docs = load_corpus(RGUARD_DATA_DIR "/corpus");
    ASSERT_GT(docs.size(), 100u);
    EXPECT_TRUE(std::is_sorted(docs.begin(), docs.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    std::size_t ransom = 0;
    for (const auto& d : docs) ransom += d.label == Label::Ransom;
    EXPECT_GT(ransom, 0u);
    EXPECT_LT(ransom, docs.size());
    EXPECT_THROW(load_corpus("/nonexistent"), std::runtime_error);
}

// Source-code files from the benign side are a realistic false-positive
// risk on build machines; none of the held-out ones may be called a note.
TEST(Corpus, HeldOutBenignCodeIsNeverRansom) {
    const auto docs = load_corpus(RGUARD_DATA_DIR "/corpus");
    const auto r = train_pipeline(docs, {.seed = 42});
    std::set<std::string> test_ids(r.test_ids.begin(), r.test_ids.end());
    std::size_t checked = 0;
    for (const auto& d : docs) {
        if (d.label != Label::Benign || !test_ids.count(d.id)) continue;
        const bool code = d.text.find('{') != std::string::npos || d.text.find("#include") != std::string::npos ||
                          d.text.find("def ") != std::string::npos;
        if (!code) continue;
        ++checked;
        EXPECT_NE(classify_content(r.bundle, d.text).kind, VerdictKind::RansomNote) << d.id;
    }
    EXPECT_GT(checked, 0u);
}

TEST(Report, TableHasFixedRows) {
    Metrics m;
    m.accuracy = 0.5;
    m.cv_fold_scores = {1.0, 0.5};
    m.cv_mean = 0.75;
    const auto table = metrics_table(m);
    for (const char* row : {"Accuracy", "Precision", "Recall", "F1-Score", "Average CV Score (K=2)"})
        EXPECT_NE(table.find(row), std::string::npos) << row;
    EXPECT_NE(metrics_json(m).find("\"cv_mean\":0.75"), std::string::npos);
}
