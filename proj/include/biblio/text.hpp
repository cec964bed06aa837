#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace biblio::text {

/// ASCII lowercase; bytes outside [A-Z] pass through unchanged.
std::string to_lower(std::string_view s);

/// Folds common Latin diacritics (Latin-1 supplement and Latin Extended-A)
/// to their ASCII base letters. Unknown multi-byte sequences pass through.
std::string strip_diacritics(std::string_view s);

/// Lowercase, fold diacritics, drop punctuation, collapse whitespace.
/// The canonical form used for title and venue matching.
std::string normalize(std::string_view s);

/// Word tokens of normalize(s), split on whitespace.
std::vector<std::string> tokenize(std::string_view s);

/// Deterministic author key: "surname, initials", lowercased and folded.
/// Accepts "Surname, Given Names" and "Given Names Surname" input shapes.
std::string author_key(std::string_view display_name);

/// FNV-1a 64-bit, used for stable corpus hashes.
std::uint64_t fnv1a(std::string_view s);

/// True when the code is a valid ISO-3166 alpha-2 country code.
bool is_iso_country(std::string_view code);

}  // namespace biblio::text
