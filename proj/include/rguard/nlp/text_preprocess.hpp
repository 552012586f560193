#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rguard::nlp {

using TokenList = std::vector<std::string>;

/// Identifies the tokenizer + stopword list + stemmer combination. Stored in
/// every model bundle; a bundle is only usable with the same tag.
inline constexpr std::string_view kPreprocessingTag = "rguard-pre-v1:porter1980+stop179+special4";

inline constexpr std::string_view kOnionToken = "__onion__";
inline constexpr std::string_view kUrlToken = "__url__";
inline constexpr std::string_view kEmailToken = "__email__";
inline constexpr std::string_view kBtcToken = "__btcaddr__";

/// Lowercased, stopword-free, stemmed tokens. URL-like chunks are mapped to
/// placeholder tokens first (onion > url > email > bitcoin address).
TokenList preprocess(std::string_view text);

bool is_stopword(std::string_view lowered);
std::size_t stopword_count();

/// Original Porter (1980) suffix-stripping stemmer for lowercase ASCII words.
std::string porter_stem(std::string_view word);

}  // namespace rguard::nlp
