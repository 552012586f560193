#include "rguard/verdict.hpp"

#include <sstream>

namespace rguard {

std::string_view to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Benign: return "benign";
    case VerdictKind::KnownMalware: return "known_malware";
    case VerdictKind::RansomNote: return "ransom_note";
    case VerdictKind::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::string describe(const Verdict& v) {
    std::ostringstream out;
    out << to_string(v.kind);
    if (!v.detail.empty()) out << '(' << v.detail << ')';
    if (v.margin) out << " margin=" << *v.margin;
    return out.str();
}

}  // namespace rguard
