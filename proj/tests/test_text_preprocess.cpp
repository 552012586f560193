#include <gtest/gtest.h>

#include <algorithm>

#include "rguard/nlp/text_preprocess.hpp"

using namespace rguard::nlp;

namespace {

bool contains(const TokenList& t, std::string_view s) { return std::find(t.begin(), t.end(), s) != t.end(); }

}  // namespace

TEST(Preprocess, EncryptedFilesSentence) {
    const auto t = preprocess("Your FILES are encrypted!!!");
    EXPECT_TRUE(contains(t, "file"));
    EXPECT_TRUE(contains(t, "encrypt"));
    EXPECT_FALSE(contains(t, "are"));
    EXPECT_FALSE(contains(t, "your"));
}

TEST(Preprocess, EmptyInput) { EXPECT_TRUE(preprocess("").empty()); }

TEST(Preprocess, OnionBeatsUrl) {
    const auto t = preprocess("visit http://pay.example.onion now");
    EXPECT_EQ(t, (TokenList{"visit", std::string(kOnionToken)}));
}

TEST(Preprocess, SpecialTokens) {
    EXPECT_EQ(preprocess("https://example.com/pay"), TokenList{std::string(kUrlToken)});
    EXPECT_EQ(preprocess("www.example.com"), TokenList{std::string(kUrlToken)});
    EXPECT_EQ(preprocess("<support@mail.example.org>"), TokenList{std::string(kEmailToken)});
    EXPECT_EQ(preprocess("bc1qar0srrr7xfkvy5l643lydnw9re59gtzzwf5mdq"), TokenList{std::string(kBtcToken)});
    EXPECT_EQ(preprocess("1A1zP1eP5QGefi2DMPTfTL5SLmv7DivfNa."), TokenList{std::string(kBtcToken)});
    // Digits alone are not an address.
    EXPECT_EQ(preprocess("1111111111111111111111111111"), TokenList{"1111111111111111111111111111"});
}

TEST(Preprocess, TokensAreLowercaseWithoutStopwordsOrPunctuation) {
    const auto t = preprocess("The QUICK, brown fox -- jumped over 2 lazy dogs; it's done.");
    for (const auto& tok : t) {
        EXPECT_FALSE(is_stopword(tok)) << tok;
        EXPECT_TRUE(std::any_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isalnum(c) || c >= 0x80; }))
            << tok;
        EXPECT_TRUE(std::none_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isupper(c); })) << tok;
    }
    EXPECT_TRUE(contains(t, "quick"));
    EXPECT_TRUE(contains(t, "jump"));
    EXPECT_TRUE(contains(t, "dog"));
    EXPECT_FALSE(contains(t, "2"));  // single character
}

TEST(Preprocess, NonAsciiWordsKeptUnstemmed) {
    const auto t = preprocess("café encryptés");
    EXPECT_TRUE(contains(t, "café"));
    EXPECT_TRUE(contains(t, "encryptés"));
}

TEST(Stopwords, FrozenListSize) {
    EXPECT_EQ(stopword_count(), 179u);
    EXPECT_TRUE(is_stopword("the"));
    EXPECT_TRUE(is_stopword("don't"));
    EXPECT_FALSE(is_stopword("file"));
}

// Word/stem pairs worked through in the original algorithm description.
TEST(PorterStemmer, PublishedExamples) {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"caresses", "caress"},   {"ponies", "poni"},       {"ties", "ti"},
        {"caress", "caress"},     {"cats", "cat"},          {"feed", "feed"},
        {"agreed", "agre"},       {"plastered", "plaster"}, {"bled", "bled"},
        {"motoring", "motor"},    {"sing", "sing"},         {"conflated", "conflat"},
        {"troubled", "troubl"},   {"sized", "size"},        {"hopping", "hop"},
        {"tanned", "tan"},        {"falling", "fall"},      {"hissing", "hiss"},
        {"fizzed", "fizz"},       {"failing", "fail"},      {"filing", "file"},
        {"happy", "happi"},       {"sky", "sky"},           {"relational", "relat"},
        {"conditional", "condit"}, {"rational", "ration"},  {"valenci", "valenc"},
        {"hesitanci", "hesit"},   {"digitizer", "digit"},   {"conformabli", "conform"},
        {"radicalli", "radic"},   {"differentli", "differ"}, {"vileli", "vile"},
        {"analogousli", "analog"}, {"vietnamization", "vietnam"}, {"predication", "predic"},
        {"operator", "oper"},     {"feudalism", "feudal"},  {"decisiveness", "decis"},
        {"hopefulness", "hope"},  {"callousness", "callous"}, {"formaliti", "formal"},
        {"sensitiviti", "sensit"}, {"sensibiliti", "sensibl"}, {"triplicate", "triplic"},
        {"formative", "form"},    {"formalize", "formal"},  {"electriciti", "electr"},
        {"electrical", "electr"}, {"hopeful", "hope"},      {"goodness", "good"},
        {"revival", "reviv"},     {"allowance", "allow"},   {"inference", "infer"},
        {"airliner", "airlin"},   {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"},
        {"defensible", "defens"}, {"irritant", "irrit"},    {"replacement", "replac"},
        {"adjustment", "adjust"}, {"dependent", "depend"},  {"adoption", "adopt"},
        {"homologou", "homolog"}, {"communism", "commun"},  {"activate", "activ"},
        {"angulariti", "angular"}, {"homologous", "homolog"}, {"effective", "effect"},
        {"bowdlerize", "bowdler"}, {"probate", "probat"},   {"rate", "rate"},
        {"cease", "ceas"},        {"controll", "control"},  {"roll", "roll"},
        {"generalizations", "gener"}, {"oscillators", "oscil"},
    };
    for (const auto& [word, stem] : cases) EXPECT_EQ(porter_stem(word), stem) << word;
}

TEST(PorterStemmer, ShortWordsUntouched) {
    EXPECT_EQ(porter_stem("is"), "is");
    EXPECT_EQ(porter_stem("a"), "a");
}
