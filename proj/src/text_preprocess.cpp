#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "rguard/nlp/text_preprocess.hpp"

namespace rguard::nlp {

namespace {

// Frozen English stopword list (sorted, 179 entries). Changing it changes
// kPreprocessingTag.
constexpr std::array<std::string_view, 179> kStopwords = {
    "a", "about", "above", "after", "again", "against", "ain", "all", "am", "an",
    "and", "any", "are", "aren", "aren't", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can", "couldn", "couldn't",
    "d", "did", "didn", "didn't", "do", "does", "doesn", "doesn't", "doing", "don",
    "don't", "down", "during", "each", "few", "for", "from", "further", "had", "hadn",
    "hadn't", "has", "hasn", "hasn't", "have", "haven", "haven't", "having", "he", "her",
    "here", "hers", "herself", "him", "himself", "his", "how", "i", "if", "in",
    "into", "is", "isn", "isn't", "it", "it's", "its", "itself", "just", "ll",
    "m", "ma", "me", "mightn", "mightn't", "more", "most", "mustn", "mustn't", "my",
    "myself", "needn", "needn't", "no", "nor", "not", "now", "o", "of", "off",
    "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over",
    "own", "re", "s", "same", "shan", "shan't", "she", "she's", "should", "should've",
    "shouldn", "shouldn't", "so", "some", "such", "t", "than", "that", "that'll", "the",
    "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this", "those",
    "through", "to", "too", "under", "until", "up", "ve", "very", "was", "wasn",
    "wasn't", "we", "were", "weren", "weren't", "what", "when", "where", "which", "while",
    "who", "whom", "why", "will", "with", "won", "won't", "wouldn", "wouldn't", "y",
    "you", "you'd", "you'll", "you're", "you've", "your", "yours", "yourself", "yourselves",
};

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

bool is_ascii_alpha_word(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= 'a' && c <= 'z'; });
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

std::string_view strip_enclosing(std::string_view chunk) {
    constexpr std::string_view kEdge = "\"'()[]{}<>,;:!?.*`|";
    const auto first = chunk.find_first_not_of(kEdge);
    if (first == std::string_view::npos) return {};
    const auto last = chunk.find_last_not_of(kEdge);
    return chunk.substr(first, last - first + 1);
}

bool looks_like_onion(std::string_view lowered) {
    const auto pos = lowered.find(".onion");
    if (pos == std::string_view::npos || pos == 0) return false;
    const auto after = pos + 6;
    return after == lowered.size() || lowered[after] == '/' || lowered[after] == ':' || lowered[after] == '?';
}

bool looks_like_url(std::string_view lowered) {
    return starts_with(lowered, "http://") || starts_with(lowered, "https://") ||
           starts_with(lowered, "ftp://") || starts_with(lowered, "www.");
}

bool looks_like_email(std::string_view s) {
    const auto at = s.find('@');
    if (at == std::string_view::npos || at == 0 || s.find('@', at + 1) != std::string_view::npos) return false;
    const auto local = s.substr(0, at);
    const auto domain = s.substr(at + 1);
    const auto local_ok = std::all_of(local.begin(), local.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '.' || c == '_' || c == '%' || c == '+' || c == '-';
    });
    const auto dot = domain.rfind('.');
    if (!local_ok || dot == std::string_view::npos || dot == 0) return false;
    const auto tld = domain.substr(dot + 1);
    const auto domain_ok = std::all_of(domain.begin(), domain.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '.' || c == '-';
    });
    return domain_ok && tld.size() >= 2 &&
           std::all_of(tld.begin(), tld.end(), [](unsigned char c) { return std::isalpha(c); });
}

bool looks_like_btc_address(std::string_view s) {
    const auto has_digit = std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    const auto has_alpha = std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
    if (!has_digit || !has_alpha) return false;
    if (starts_with(s, "bc1")) {
        constexpr std::string_view kBech32 = "023456789acdefghjklmnpqrstuvwxyz";
        return s.size() >= 14 && s.size() <= 74 &&
               s.substr(3).find_first_not_of(kBech32) == std::string_view::npos;
    }
    constexpr std::string_view kBase58 = "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";
    return (s.front() == '1' || s.front() == '3') && s.size() >= 26 && s.size() <= 35 &&
           s.find_first_not_of(kBase58) == std::string_view::npos;
}

void append_word_tokens(std::string_view chunk, TokenList& out) {
    std::size_t i = 0;
    while (i < chunk.size()) {
        while (i < chunk.size() && !is_word_byte(static_cast<unsigned char>(chunk[i]))) ++i;
        const std::size_t start = i;
        while (i < chunk.size() && is_word_byte(static_cast<unsigned char>(chunk[i]))) ++i;
        if (i - start < 2) continue;
        auto tok = lower_ascii(chunk.substr(start, i - start));
        if (is_stopword(tok)) continue;
        if (is_ascii_alpha_word(tok)) tok = porter_stem(tok);
        out.push_back(std::move(tok));
    }
}

}  // namespace

bool is_stopword(std::string_view lowered) {
    return std::binary_search(kStopwords.begin(), kStopwords.end(), lowered);
}

std::size_t stopword_count() { return kStopwords.size(); }

TokenList preprocess(std::string_view text) {
    TokenList out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) continue;
        const auto chunk = strip_enclosing(text.substr(start, i - start));
        if (chunk.empty()) continue;
        const auto lowered = lower_ascii(chunk);
        if (looks_like_onion(lowered)) {
            out.emplace_back(kOnionToken);
        } else if (looks_like_url(lowered)) {
            out.emplace_back(kUrlToken);
        } else if (looks_like_email(chunk)) {
            out.emplace_back(kEmailToken);
        } else if (looks_like_btc_address(chunk)) {
            out.emplace_back(kBtcToken);
        } else {
            append_word_tokens(chunk, out);
        }
    }
    return out;
}

}  // namespace rguard::nlp
