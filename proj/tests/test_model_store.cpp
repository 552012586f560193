#include <gtest/gtest.h>

#include <json.hpp>

#include "rguard/model_store.hpp"
#include "rguard/nlp/pipeline.hpp"
#include "test_support.hpp"

using namespace rguard;
using namespace rguard::nlp;
namespace t = rguard::testing;
using ojson = nlohmann::ordered_json;

namespace {

const ModelBundle& trained() {
    static const ModelBundle b = [] {
        std::vector<Document> docs;
        const char* ransom[] = {"your files are encrypted pay bitcoin to recover the decryption key",
                                "all documents locked send payment to wallet before deadline",
                                "we encrypted your network contact us for the private key",
                                "files encrypted restore requires bitcoin payment to our wallet"};
        const char* benign[] = {"meeting agenda for the quarterly project review on tuesday",
                                "grandma's recipe for apple pie with cinnamon and butter",
                                "travel itinerary flight departs at noon hotel booked",
                                "garden notes plant tomatoes after the last frost"};
        for (int i = 0; i < 4; ++i) {
            docs.push_back({"ransom/" + std::to_string(i), ransom[i], Label::Ransom});
            docs.push_back({"benign/" + std::to_string(i), benign[i], Label::Benign});
        }
        return fit_bundle(docs, {.k = 10});
    }();
    return b;
}

std::string expect_bundle_error(const std::string& text) {
    try {
        parse_bundle(text);
    } catch (const BundleError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no error";
    return {};
}

ojson as_json(const ModelBundle& b) { return ojson::parse(serialize_bundle(b)); }

}  // namespace

TEST(ModelStore, RoundTripIsExact) {
    t::TempDir dir;
    save_bundle(trained(), dir / "m.rgmodel");
    const auto loaded = load_bundle(dir / "m.rgmodel");
    EXPECT_EQ(loaded, trained());
    EXPECT_EQ(serialize_bundle(loaded), serialize_bundle(trained()));
}

TEST(ModelStore, SavingTwiceGivesIdenticalBytes) {
    t::TempDir dir;
    save_bundle(trained(), dir / "a.rgmodel");
    save_bundle(load_bundle(dir / "a.rgmodel"), dir / "b.rgmodel");
    EXPECT_EQ(t::read_file(dir / "a.rgmodel"), t::read_file(dir / "b.rgmodel"));
}

TEST(ModelStore, LoadedBundleClassifiesIdentically) {
    const auto loaded = parse_bundle(serialize_bundle(trained()));
    for (const char* text : {"pay bitcoin to decrypt your encrypted files now", "agenda for the garden meeting"}) {
        const auto a = classify_tokens(trained(), preprocess(text));
        const auto b = classify_tokens(loaded, preprocess(text));
        EXPECT_EQ(a.label, b.label);
        EXPECT_EQ(a.log_posterior, b.log_posterior);
    }
}

TEST(ModelStore, SelectedIndexOutsideVocabularyRejected) {
    auto j = as_json(trained());
    j["selected_features"].back() = j["vocabulary"].size();
    EXPECT_NE(expect_bundle_error(j.dump()).find("selected_features"), std::string::npos);
}

TEST(ModelStore, TruncatedFileRejected) {
    const auto text = serialize_bundle(trained());
    EXPECT_NE(expect_bundle_error(text.substr(0, text.size() / 2)).find("parse error"), std::string::npos);
}

TEST(ModelStore, FutureVersionRejected) {
    auto j = as_json(trained());
    j["format_version"] = 999;
    EXPECT_EQ(expect_bundle_error(j.dump()), "unsupported version 999");
}

TEST(ModelStore, UnknownFieldRejected) {
    auto j = as_json(trained());
    j["extra"] = 1;
    EXPECT_EQ(expect_bundle_error(j.dump()), "unknown field extra");
}

TEST(ModelStore, MissingFieldNamed) {
    auto j = as_json(trained());
    j.erase("alpha");
    EXPECT_EQ(expect_bundle_error(j.dump()), "missing field alpha");
}

TEST(ModelStore, PreprocessingTagMismatchRejected) {
    auto j = as_json(trained());
    j["preprocessing_tag"] = "other-pre";
    EXPECT_NE(expect_bundle_error(j.dump()).find("preprocessing_tag"), std::string::npos);
}

TEST(ModelStore, ProbabilitiesMustSumToOne) {
    auto j = as_json(trained());
    j["feature_log_prob"][1][0] = 0.0;
    EXPECT_NE(expect_bundle_error(j.dump()).find("feature_log_prob"), std::string::npos);
}

TEST(ModelStore, MissingFileReported) {
    EXPECT_THROW(load_bundle("/nonexistent/m.rgmodel"), BundleError);
}
