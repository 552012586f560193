#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rguard {

enum class VerdictKind {
    Benign,
    KnownMalware,
    RansomNote,
    Indeterminate,
};

std::string_view to_string(VerdictKind k);

/// Outcome of classifying one process artifact (an executable or a created file).
struct Verdict {
    VerdictKind kind = VerdictKind::Indeterminate;
    // Digest hex for KnownMalware/Benign exec checks, reason for Indeterminate.
    std::string detail;
    // log P(ransom | x) - log P(benign | x) for NLP verdicts.
    std::optional<double> margin;

    static Verdict benign(std::string detail = {}, std::optional<double> margin = std::nullopt) {
        return {VerdictKind::Benign, std::move(detail), margin};
    }
    static Verdict known_malware(std::string digest_hex) {
        return {VerdictKind::KnownMalware, std::move(digest_hex), std::nullopt};
    }
    static Verdict ransom_note(double margin) { return {VerdictKind::RansomNote, {}, margin}; }
    static Verdict indeterminate(std::string reason) {
        return {VerdictKind::Indeterminate, std::move(reason), std::nullopt};
    }

    bool positive() const { return kind == VerdictKind::KnownMalware || kind == VerdictKind::RansomNote; }
    bool operator==(const Verdict&) const = default;
};

std::string describe(const Verdict& v);

}  // namespace rguard
