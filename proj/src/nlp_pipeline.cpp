#include "rguard/nlp/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rguard/nlp/chi2_selector.hpp"
#include "rguard/nlp/text_preprocess.hpp"
#include "rguard/nlp/tfidf.hpp"
#include "rguard/random.hpp"
#include "rguard/static_analyzer.hpp"
#include "utf8.hpp"

namespace rguard::nlp {

namespace fs = std::filesystem;

namespace {

std::string read_all(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Label> labels_of(std::span<const Document> docs) {
    std::vector<Label> out;
    out.reserve(docs.size());
    for (const auto& d : docs) {
        if (!d.label) throw std::invalid_argument("document " + d.id + " has no label");
        out.push_back(*d.label);
    }
    return out;
}

std::array<std::vector<std::size_t>, kNumClasses> indices_by_class(std::span<const Label> labels) {
    std::array<std::vector<std::size_t>, kNumClasses> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[class_index(labels[i])].push_back(i);
    return by_class;
}

std::string fingerprint(std::span<const Document> train, const TrainConfig& config) {
    std::vector<std::string> ids;
    ids.reserve(train.size());
    for (const auto& d : train) ids.push_back(d.id);
    std::sort(ids.begin(), ids.end());
    std::ostringstream s;
    for (const auto& id : ids) s << id << '\n';
    s << "k=" << config.k << ";alpha=" << std::setprecision(17) << config.alpha
      << ";tag=" << kPreprocessingTag;
    return "sha256:" + Sha256Digest::of_bytes(s.str()).hex();
}

}  // namespace

std::vector<Document> load_corpus(const fs::path& root) {
    std::vector<Document> docs;
    for (const Label label : {Label::Benign, Label::Ransom}) {
        const fs::path dir = root / std::string(to_string(label));
        if (!fs::is_directory(dir)) throw std::runtime_error("corpus directory missing: " + dir.string());
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            docs.push_back({std::string(to_string(label)) + "/" + entry.path().filename().string(),
                            read_all(entry.path()), label});
        }
    }
    std::sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) { return a.id < b.id; });
    return docs;
}

Metrics compute_metrics(std::span<const Label> truth, std::span<const Label> predicted) {
    if (truth.size() != predicted.size()) throw std::invalid_argument("metrics: length mismatch");
    Metrics m;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool actual = truth[i] == Label::Ransom;
        const bool guess = predicted[i] == Label::Ransom;
        if (actual && guess) ++m.tp;
        else if (!actual && guess) ++m.fp;
        else if (!actual && !guess) ++m.tn;
        else ++m.fn;
    }
    const auto ratio = [](std::size_t num, std::size_t den, bool& undefined) {
        undefined = den == 0;
        return undefined ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    bool unused = false;
    m.accuracy = ratio(m.tp + m.tn, truth.size(), unused);
    m.precision = ratio(m.tp, m.tp + m.fp, m.precision_undefined);
    m.recall = ratio(m.tp, m.tp + m.fn, m.recall_undefined);
    const double pr = m.precision + m.recall;
    m.f1_undefined = pr == 0.0;
    m.f1 = m.f1_undefined ? 0.0 : 2.0 * m.precision * m.recall / pr;
    return m;
}

SplitIndices stratified_split(std::span<const Label> labels, double train_ratio, std::uint64_t seed) {
    if (!(train_ratio > 0.0 && train_ratio < 1.0)) throw std::invalid_argument("train_ratio must be in (0, 1)");
    auto by_class = indices_by_class(labels);
    DeterministicRng rng(seed);
    SplitIndices split;
    for (auto& members : by_class) {
        if (members.size() < 2) throw std::invalid_argument("each class needs at least 2 documents");
        rng.shuffle(members);
        auto n_train = static_cast<std::size_t>(std::llround(train_ratio * static_cast<double>(members.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, members.size() - 1);
        split.train.insert(split.train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(n_train));
        split.test.insert(split.test.end(), members.begin() + static_cast<std::ptrdiff_t>(n_train), members.end());
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

std::vector<std::size_t> stratified_folds(std::span<const Label> labels, std::size_t folds, std::uint64_t seed) {
    if (folds < 2) throw std::invalid_argument("need at least 2 folds");
    auto by_class = indices_by_class(labels);
    for (const auto& members : by_class) {
        if (members.size() < folds)
            throw std::invalid_argument("folds (" + std::to_string(folds) + ") exceed the smallest class size (" +
                                        std::to_string(members.size()) + ")");
    }
    DeterministicRng rng(seed);
    std::vector<std::size_t> fold_of(labels.size(), 0);
    for (auto& members : by_class) {
        rng.shuffle(members);
        for (std::size_t pos = 0; pos < members.size(); ++pos) fold_of[members[pos]] = pos % folds;
    }
    return fold_of;
}

ModelBundle fit_bundle(std::span<const Document> train, const TrainConfig& config) {
    const auto labels = labels_of(train);
    std::vector<TokenList> tokens;
    tokens.reserve(train.size());
    for (const auto& d : train) tokens.push_back(preprocess(d.text));

    ModelBundle b;
    b.preprocessing_tag = std::string(kPreprocessingTag);
    b.tfidf = fit_tfidf(tokens);

    std::vector<SparseVector> X;
    X.reserve(tokens.size());
    for (const auto& t : tokens) X.push_back(transform(b.tfidf, t));
    b.selector = chi2_select(X, labels, config.k, b.tfidf.size());

    std::vector<std::vector<double>> selected;
    selected.reserve(X.size());
    for (const auto& x : X) selected.push_back(b.selector.project(x));
    b.nb = fit_mnb(selected, labels, config.alpha);
    b.training_fingerprint = fingerprint(train, config);
    return b;
}

TrainResult train_pipeline(std::span<const Document> corpus, const TrainConfig& config) {
    const auto labels = labels_of(corpus);
    const auto split = stratified_split(labels, config.train_ratio, config.seed);

    std::vector<Document> train, test;
    for (auto i : split.train) train.push_back(corpus[i]);
    for (auto i : split.test) test.push_back(corpus[i]);

    TrainResult r;
    r.bundle = fit_bundle(train, config);
    std::vector<Label> truth, predicted;
    for (const auto& d : test) {
        truth.push_back(*d.label);
        predicted.push_back(classify_tokens(r.bundle, preprocess(d.text)).label);
        r.test_ids.push_back(d.id);
    }
    for (const auto& d : train) r.train_ids.push_back(d.id);
    r.metrics = compute_metrics(truth, predicted);
    r.metrics.seed = config.seed;
    r.metrics.train_size = train.size();
    r.metrics.test_size = test.size();
    return r;
}

CrossValidation cross_validate(std::span<const Document> corpus, std::size_t folds, const TrainConfig& config) {
    const auto labels = labels_of(corpus);
    CrossValidation cv;
    cv.fold_of = stratified_folds(labels, folds, config.seed);
    double sum = 0.0;
    for (std::size_t f = 0; f < folds; ++f) {
        std::vector<Document> train, test;
        for (std::size_t i = 0; i < corpus.size(); ++i) (cv.fold_of[i] == f ? test : train).push_back(corpus[i]);
        const auto bundle = fit_bundle(train, config);
        std::size_t correct = 0;
        for (const auto& d : test)
            if (classify_tokens(bundle, preprocess(d.text)).label == *d.label) ++correct;
        const double acc = static_cast<double>(correct) / static_cast<double>(test.size());
        cv.fold_scores.push_back(acc);
        sum += acc;
    }
    cv.mean = sum / static_cast<double>(folds);
    return cv;
}

Prediction classify_tokens(const ModelBundle& bundle, const TokenList& tokens) {
    const auto x = transform(bundle.tfidf, tokens);
    return predict(bundle.nb, bundle.selector.project(x));
}

bool looks_like_text(std::string_view content) {
    if (content.find('\0') != std::string_view::npos) return false;
    std::size_t invalid = 0;
    std::size_t i = 0;
    while (i < content.size()) {
        const auto n = detail::utf8_sequence_length(content, i);
        if (n == 0) {
            ++invalid;
            ++i;
        } else {
            i += n;
        }
    }
    return invalid * 10 < content.size() || content.empty();
}

Verdict classify_content(const ModelBundle& bundle, std::string_view content) {
    if (!looks_like_text(content)) return Verdict::indeterminate("not text");
    const auto tokens = preprocess(content);
    if (tokens.size() < kMinClassifiableTokens) return Verdict::indeterminate("too few tokens");
    const auto p = classify_tokens(bundle, tokens);
    if (p.label == Label::Ransom) return Verdict::ransom_note(p.margin());
    return Verdict::benign({}, p.margin());
}

Verdict classify_file(const ModelBundle& bundle, const fs::path& path, std::size_t max_scan_bytes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return Verdict::indeterminate("unreadable");
    std::string buf(max_scan_bytes, '\0');
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.bad()) return Verdict::indeterminate("unreadable");
    buf.resize(static_cast<std::size_t>(in.gcount()));
    return classify_content(bundle, buf);
}

std::string metrics_table(const Metrics& m) {
    std::ostringstream out;
    const auto row = [&](std::string_view name, double v, bool undefined = false) {
        out << std::left << std::setw(24) << name << std::fixed << std::setprecision(4) << v
            << (undefined ? "  (undefined: zero denominator)" : "") << '\n';
    };
    out << std::left << std::setw(24) << "Metric" << "Value\n";
    out << std::string(32, '-') << '\n';
    row("Accuracy", m.accuracy);
    row("Precision", m.precision, m.precision_undefined);
    row("Recall", m.recall, m.recall_undefined);
    row("F1-Score", m.f1, m.f1_undefined);
    if (m.cv_mean) row("Average CV Score (K=" + std::to_string(m.cv_fold_scores.size()) + ")", *m.cv_mean);
    out << std::string(32, '-') << '\n';
    out << "tp=" << m.tp << " fp=" << m.fp << " tn=" << m.tn << " fn=" << m.fn << "  train=" << m.train_size
        << " test=" << m.test_size << " seed=" << m.seed << '\n';
    return out.str();
}

std::string metrics_json(const Metrics& m) {
    nlohmann::ordered_json j;
    j["accuracy"] = m.accuracy;
    j["precision"] = m.precision;
    j["recall"] = m.recall;
    j["f1"] = m.f1;
    j["precision_undefined"] = m.precision_undefined;
    j["recall_undefined"] = m.recall_undefined;
    j["f1_undefined"] = m.f1_undefined;
    j["confusion"] = {{"tp", m.tp}, {"fp", m.fp}, {"tn", m.tn}, {"fn", m.fn}};
    j["train_size"] = m.train_size;
    j["test_size"] = m.test_size;
    j["seed"] = m.seed;
    if (m.cv_mean) {
        j["cv_fold_scores"] = m.cv_fold_scores;
        j["cv_mean"] = *m.cv_mean;
    }
    return j.dump();
}

}  // namespace rguard::nlp
