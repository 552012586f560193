#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rguard::nlp {

enum class Label : std::uint8_t { Benign = 0, Ransom = 1 };

inline constexpr std::size_t kNumClasses = 2;
inline constexpr std::array<std::string_view, kNumClasses> kClassLabels = {"benign", "ransom"};

inline std::size_t class_index(Label l) { return static_cast<std::size_t>(l); }
inline std::string_view to_string(Label l) { return kClassLabels[class_index(l)]; }
inline std::optional<Label> parse_label(std::string_view s) {
    if (s == kClassLabels[0]) return Label::Benign;
    if (s == kClassLabels[1]) return Label::Ransom;
    return std::nullopt;
}

}  // namespace rguard::nlp
