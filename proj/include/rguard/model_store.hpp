#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rguard/nlp/chi2_selector.hpp"
#include "rguard/nlp/naive_bayes.hpp"
#include "rguard/nlp/tfidf.hpp"

namespace rguard {

inline constexpr int kBundleFormatVersion = 1;
inline constexpr std::string_view kBundleExtension = ".rgmodel";

/// Everything inference needs: vectorizer, feature selector, classifier.
struct ModelBundle {
    int format_version = kBundleFormatVersion;
    std::string preprocessing_tag;
    nlp::TfIdfModel tfidf;
    nlp::Chi2Selector selector;
    nlp::NbModel nb;
    std::string training_fingerprint;

    bool operator==(const ModelBundle&) const = default;
};

class BundleError : public std::runtime_error {
public:
    BundleError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Throws BundleError naming the offending field.
void validate_bundle(const ModelBundle& b);

/// Canonical JSON text: fixed key order, shortest round-trip floats, no
/// timestamps. Equal bundles serialize to identical bytes.
std::string serialize_bundle(const ModelBundle& b);
ModelBundle parse_bundle(std::string_view text);

void save_bundle(const ModelBundle& b, const std::filesystem::path& path);
ModelBundle load_bundle(const std::filesystem::path& path);

}  // namespace rguard
