// Porter, "An algorithm for suffix stripping", Program 14(3), 1980.
// Rule tables follow the original publication (not the later "bli"/"logi"
// revisions).

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "rguard/nlp/text_preprocess.hpp"

namespace rguard::nlp {

namespace {

class Stemmer {
public:
    explicit Stemmer(std::string_view w) : b_(w) {}

    std::string run() {
        if (b_.size() <= 2) return b_;
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return b_;
    }

private:
    std::string b_;

    bool consonant(std::size_t i) const {
        switch (b_[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u': return false;
        case 'y': return i == 0 ? true : !consonant(i - 1);
        default: return true;
        }
    }

    // Number of VC sequences in b_[0, len).
    int measure(std::size_t len) const {
        int m = 0;
        std::size_t i = 0;
        while (i < len && consonant(i)) ++i;
        while (i < len) {
            while (i < len && !consonant(i)) ++i;
            if (i >= len) break;
            while (i < len && consonant(i)) ++i;
            ++m;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i)
            if (!consonant(i)) return true;
        return false;
    }

    bool double_consonant(std::size_t len) const {
        return len >= 2 && b_[len - 1] == b_[len - 2] && consonant(len - 1);
    }

    // *o: stem ends cvc, final c not w, x or y.
    bool cvc(std::size_t len) const {
        if (len < 3) return false;
        if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) return false;
        const char c = b_[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) const { return b_.size() >= s.size() && std::string_view(b_).substr(b_.size() - s.size()) == s; }
    std::size_t stem_len(std::string_view suffix) const { return b_.size() - suffix.size(); }
    void replace_suffix(std::string_view suffix, std::string_view with) {
        b_.resize(stem_len(suffix));
        b_ += with;
    }

    // First suffix in `rules` that matches decides; it is replaced iff the
    // stem measure exceeds `min_m`.
    template <std::size_t N>
    void apply_rules(const std::array<std::pair<std::string_view, std::string_view>, N>& rules, int min_m) {
        for (const auto& [suffix, with] : rules) {
            if (!ends(suffix)) continue;
            if (measure(stem_len(suffix)) > min_m) replace_suffix(suffix, with);
            return;
        }
    }

    void step1a() {
        if (ends("sses")) replace_suffix("sses", "ss");
        else if (ends("ies")) replace_suffix("ies", "i");
        else if (ends("ss")) return;
        else if (ends("s")) replace_suffix("s", "");
    }

    void step1b() {
        if (ends("eed")) {
            if (measure(stem_len("eed")) > 0) replace_suffix("eed", "ee");
            return;
        }
        std::string_view suffix;
        if (ends("ed")) suffix = "ed";
        else if (ends("ing")) suffix = "ing";
        else return;
        if (!has_vowel(stem_len(suffix))) return;
        replace_suffix(suffix, "");
        if (ends("at")) b_ += 'e';
        else if (ends("bl")) b_ += 'e';
        else if (ends("iz")) b_ += 'e';
        else if (double_consonant(b_.size())) {
            const char c = b_.back();
            if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
        } else if (measure(b_.size()) == 1 && cvc(b_.size())) {
            b_ += 'e';
        }
    }

    void step1c() {
        if (ends("y") && has_vowel(b_.size() - 1)) b_.back() = 'i';
    }

    void step2() {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 20> kRules = {{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
        }};
        apply_rules(kRules, 0);
    }

    void step3() {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kRules = {{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        apply_rules(kRules, 0);
    }

    void step4() {
        static constexpr std::array<std::string_view, 19> kSuffixes = {
            "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
            "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
        };
        // Longest matching suffix wins.
        std::string_view best;
        for (auto s : kSuffixes)
            if (ends(s) && s.size() > best.size()) best = s;
        if (best.empty()) return;
        const std::size_t len = stem_len(best);
        if (best == "ion" && !(len > 0 && (b_[len - 1] == 's' || b_[len - 1] == 't'))) return;
        if (measure(len) > 1) b_.resize(len);
    }

    void step5a() {
        if (!ends("e")) return;
        const std::size_t len = b_.size() - 1;
        const int m = measure(len);
        if (m > 1 || (m == 1 && !cvc(len))) b_.resize(len);
    }

    void step5b() {
        if (measure(b_.size()) > 1 && double_consonant(b_.size()) && b_.back() == 'l') b_.pop_back();
    }
};

}  // namespace

std::string porter_stem(std::string_view word) { return Stemmer(word).run(); }

}  // namespace rguard::nlp
