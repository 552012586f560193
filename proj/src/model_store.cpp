#include "rguard/model_store.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rguard/event_model.hpp"
#include "rguard/nlp/label.hpp"
#include "rguard/nlp/text_preprocess.hpp"

namespace rguard {

using ojson = nlohmann::ordered_json;

namespace {

constexpr double kProbSumTolerance = 1e-9;

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
    throw BundleError(field, "invariant violation in " + field + ": " + what);
}

void check_log_distribution(const std::string& field, const std::vector<double>& log_probs) {
    double sum = 0.0;
    for (double v : log_probs) {
        if (!std::isfinite(v)) invalid(field, "non-finite log probability");
        sum += std::exp(v);
    }
    if (std::abs(sum - 1.0) > kProbSumTolerance) invalid(field, "probabilities do not sum to 1");
}

}  // namespace

void validate_bundle(const ModelBundle& b) {
    if (b.format_version != kBundleFormatVersion)
        throw BundleError("format_version", "unsupported version " + std::to_string(b.format_version));
    if (b.preprocessing_tag != nlp::kPreprocessingTag)
        invalid("preprocessing_tag", "bundle built with '" + b.preprocessing_tag + "', this build uses '" +
                                         std::string(nlp::kPreprocessingTag) + "'");
    const auto& t = b.tfidf;
    const std::size_t vocab = t.vocabulary.size();
    if (vocab == 0) invalid("vocabulary", "empty");
    for (std::size_t i = 1; i < vocab; ++i)
        if (!(t.vocabulary[i - 1] < t.vocabulary[i])) invalid("vocabulary", "not strictly sorted");
    if (t.doc_count == 0) invalid("doc_count", "must be positive");
    if (t.idf.size() != vocab) invalid("idf", "length differs from vocabulary");
    if (t.doc_freq.size() != vocab) invalid("idf", "document frequencies missing");
    for (std::size_t i = 0; i < vocab; ++i) {
        if (t.doc_freq[i] == 0 || t.doc_freq[i] > t.doc_count) invalid("idf", "document frequency out of range");
        if (!std::isfinite(t.idf[i]) || t.idf[i] < 1.0) invalid("idf", "weight below 1");
    }

    const auto& s = b.selector;
    if (s.selected.size() != s.k) invalid("selected_features", "count differs from k");
    if (s.selected.empty()) invalid("selected_features", "empty");
    for (std::size_t i = 0; i < s.selected.size(); ++i) {
        if (s.selected[i] >= vocab) invalid("selected_features", "index >= vocabulary size");
        if (i > 0 && s.selected[i - 1] >= s.selected[i]) invalid("selected_features", "not strictly ascending");
    }
    if (s.scores.size() != vocab) invalid("chi2_scores", "length differs from vocabulary");

    const auto& nb = b.nb;
    if (!(nb.alpha > 0.0) || !std::isfinite(nb.alpha)) invalid("alpha", "must be > 0");
    check_log_distribution("class_log_prior", {nb.class_log_prior.begin(), nb.class_log_prior.end()});
    for (const auto& row : nb.feature_log_prob) {
        if (row.size() != s.selected.size()) invalid("feature_log_prob", "dimension differs from selected features");
        check_log_distribution("feature_log_prob", row);
    }
}

std::string serialize_bundle(const ModelBundle& b) {
    validate_bundle(b);
    ojson j;
    j["format_version"] = b.format_version;
    j["preprocessing_tag"] = b.preprocessing_tag;
    auto vocab = ojson::array();
    for (const auto& tok : b.tfidf.vocabulary) vocab.push_back(escape_bytes(tok));
    j["vocabulary"] = std::move(vocab);
    j["idf"] = b.tfidf.idf;
    j["doc_count"] = b.tfidf.doc_count;
    j["selected_features"] = b.selector.selected;
    j["chi2_scores"] = b.selector.scores;
    j["class_labels"] = nlp::kClassLabels;
    j["class_log_prior"] = b.nb.class_log_prior;
    j["feature_log_prob"] = b.nb.feature_log_prob;
    j["alpha"] = b.nb.alpha;
    j["training_fingerprint"] = b.training_fingerprint;
    return j.dump(1) + "\n";
}

namespace {

constexpr std::array<std::string_view, 12> kTopLevel = {
    "format_version", "preprocessing_tag", "vocabulary",      "idf",
    "doc_count",      "selected_features", "chi2_scores",     "class_labels",
    "class_log_prior", "feature_log_prob", "alpha",           "training_fingerprint",
};

template <typename T>
T field_as(const ojson& j, std::string_view field) {
    const auto it = j.find(field);
    if (it == j.end()) throw BundleError(std::string(field), "missing field " + std::string(field));
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw BundleError(std::string(field), "field " + std::string(field) + " has the wrong type");
    }
}

}  // namespace

ModelBundle parse_bundle(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw BundleError("", std::string("bundle parse error: ") + e.what());
    }
    if (!j.is_object()) throw BundleError("", "bundle parse error: top level is not an object");

    ModelBundle b;
    b.format_version = field_as<int>(j, "format_version");
    if (b.format_version != kBundleFormatVersion)
        throw BundleError("format_version", "unsupported version " + std::to_string(b.format_version));
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(kTopLevel.begin(), kTopLevel.end(), it.key()) == kTopLevel.end())
            throw BundleError(it.key(), "unknown field " + it.key());
    }

    b.preprocessing_tag = field_as<std::string>(j, "preprocessing_tag");
    for (const auto& tok : field_as<std::vector<std::string>>(j, "vocabulary")) {
        try {
            b.tfidf.vocabulary.push_back(unescape_bytes(tok));
        } catch (const std::invalid_argument&) {
            throw BundleError("vocabulary", "invariant violation in vocabulary: bad escape");
        }
    }
    b.tfidf.idf = field_as<std::vector<double>>(j, "idf");
    b.tfidf.doc_count = field_as<std::uint64_t>(j, "doc_count");
    // Document frequencies are implied by idf; recover and cross-check them.
    b.tfidf.doc_freq.reserve(b.tfidf.idf.size());
    for (double w : b.tfidf.idf) {
        const double df = (1.0 + static_cast<double>(b.tfidf.doc_count)) * std::exp(1.0 - w) - 1.0;
        const double rounded = std::round(df);
        if (!std::isfinite(df) || rounded < 1.0 || std::abs(df - rounded) > 1e-6 ||
            std::abs(nlp::smooth_idf(b.tfidf.doc_count, static_cast<std::uint64_t>(rounded)) - w) > 1e-12)
            invalid("idf", "weight is not a smooth idf for doc_count");
        b.tfidf.doc_freq.push_back(static_cast<std::uint64_t>(rounded));
    }
    b.tfidf.reindex();

    b.selector.selected = field_as<std::vector<nlp::FeatureIndex>>(j, "selected_features");
    b.selector.k = b.selector.selected.size();
    b.selector.scores = field_as<std::vector<double>>(j, "chi2_scores");

    const auto labels = field_as<std::vector<std::string>>(j, "class_labels");
    if (labels.size() != nlp::kNumClasses || labels[0] != nlp::kClassLabels[0] || labels[1] != nlp::kClassLabels[1])
        invalid("class_labels", "expected [\"benign\", \"ransom\"]");
    const auto prior = field_as<std::vector<double>>(j, "class_log_prior");
    if (prior.size() != nlp::kNumClasses) invalid("class_log_prior", "expected two classes");
    b.nb.class_log_prior = {prior[0], prior[1]};
    const auto flp = field_as<std::vector<std::vector<double>>>(j, "feature_log_prob");
    if (flp.size() != nlp::kNumClasses) invalid("feature_log_prob", "expected two classes");
    b.nb.feature_log_prob = {flp[0], flp[1]};
    b.nb.alpha = field_as<double>(j, "alpha");
    b.training_fingerprint = field_as<std::string>(j, "training_fingerprint");

    validate_bundle(b);
    return b;
}

void save_bundle(const ModelBundle& b, const std::filesystem::path& path) {
    const auto text = serialize_bundle(b);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw BundleError("", "cannot write bundle " + path.string());
    out << text;
    out.flush();
    if (!out) throw BundleError("", "error writing bundle " + path.string());
}

ModelBundle load_bundle(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BundleError("", "cannot read bundle " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bundle(ss.str());
}

}  // namespace rguard
