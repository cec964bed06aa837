#include "biblio/text.hpp"

#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace biblio::text {

namespace {

// Base letters for U+00C0..U+00FF. '\0' means drop the character.
constexpr std::array<char, 64> kLatin1Fold = {
    'A', 'A', 'A', 'A', 'A', 'A', 'A', 'C', 'E', 'E', 'E', 'E', 'I',
    'I', 'I', 'I', 'D', 'N', 'O', 'O', 'O', 'O', 'O', 0,   'O', 'U',
    'U', 'U', 'U', 'Y', 0,   's', 'a', 'a', 'a', 'a', 'a', 'a', 'a',
    'c', 'e', 'e', 'e', 'e', 'i', 'i', 'i', 'i', 'd', 'n', 'o', 'o',
    'o', 'o', 'o', 0,   'o', 'u', 'u', 'u', 'u', 'y', 0,   'y'};

// Base letters for U+0100..U+017F (Latin Extended-A).
constexpr std::string_view kLatinExtAFold =
    "AaAaAaCcCcCcCcDdDdEeEeEeEeEeGgGgGgGgHhHhIiIiIiIiIiIiJjKkkLlLlLlLlLl"
    "NnNnNnnNnOoOoOoOoRrRrRrSsSsSsSsTtTtTtUuUuUuUuUuUuWwYyYZzZzZzs";

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s)
    out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c))
                           : static_cast<char>(c));
  return out;
}

std::string strip_diacritics(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = s[i];
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    if (i + 1 < s.size()) {
      unsigned char c2 = s[i + 1];
      unsigned cp = 0;
      if ((c & 0xE0) == 0xC0 && (c2 & 0xC0) == 0x80) {
        cp = (unsigned(c & 0x1F) << 6) | (c2 & 0x3F);
        if (cp >= 0xC0 && cp <= 0xFF) {
          char base = kLatin1Fold[cp - 0xC0];
          if (base) out.push_back(base);
          i += 2;
          continue;
        }
        if (cp >= 0x100 && cp <= 0x17F) {
          out.push_back(kLatinExtAFold[cp - 0x100]);
          i += 2;
          continue;
        }
        out.append(s.substr(i, 2));
        i += 2;
        continue;
      }
    }
    // Not a recognized sequence; keep the byte as-is.
    out.push_back(static_cast<char>(c));
    ++i;
  }
  return out;
}

std::string normalize(std::string_view s) {
  std::string folded = to_lower(strip_diacritics(s));
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (unsigned char c : folded) {
    if (std::isalnum(c)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(static_cast<char>(c));
    } else {
      pending_space = true;  // punctuation and whitespace both separate
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::istringstream in(normalize(s));
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string author_key(std::string_view display_name) {
  std::string name = to_lower(strip_diacritics(display_name));
  std::string surname;
  std::string rest;
  auto comma = name.find(',');
  if (comma != std::string::npos) {
    surname = name.substr(0, comma);
    rest = name.substr(comma + 1);
  } else {
    // "given names surname": last token is the surname
    std::istringstream in(name);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (toks.empty()) return {};
    surname = toks.back();
    toks.pop_back();
    for (const auto& g : toks) rest += g + ' ';
  }
  // keep only letters in the surname
  std::string sclean;
  for (unsigned char c : surname)
    if (std::isalpha(c)) sclean.push_back(static_cast<char>(c));
  std::string initials;
  bool at_start = true;
  for (unsigned char c : rest) {
    if (std::isalpha(c)) {
      if (at_start) initials.push_back(static_cast<char>(c));
      at_start = false;
    } else {
      at_start = true;
    }
  }
  if (sclean.empty()) return initials;
  return initials.empty() ? sclean : sclean + ", " + initials;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool is_iso_country(std::string_view code) {
  static const std::set<std::string_view> kCodes = {
      "AD", "AE", "AF", "AG", "AI", "AL", "AM", "AO", "AQ", "AR", "AS", "AT",
      "AU", "AW", "AX", "AZ", "BA", "BB", "BD", "BE", "BF", "BG", "BH", "BI",
      "BJ", "BL", "BM", "BN", "BO", "BQ", "BR", "BS", "BT", "BV", "BW", "BY",
      "BZ", "CA", "CC", "CD", "CF", "CG", "CH", "CI", "CK", "CL", "CM", "CN",
      "CO", "CR", "CU", "CV", "CW", "CX", "CY", "CZ", "DE", "DJ", "DK", "DM",
      "DO", "DZ", "EC", "EE", "EG", "EH", "ER", "ES", "ET", "FI", "FJ", "FK",
      "FM", "FO", "FR", "GA", "GB", "GD", "GE", "GF", "GG", "GH", "GI", "GL",
      "GM", "GN", "GP", "GQ", "GR", "GS", "GT", "GU", "GW", "GY", "HK", "HM",
      "HN", "HR", "HT", "HU", "ID", "IE", "IL", "IM", "IN", "IO", "IQ", "IR",
      "IS", "IT", "JE", "JM", "JO", "JP", "KE", "KG", "KH", "KI", "KM", "KN",
      "KP", "KR", "KW", "KY", "KZ", "LA", "LB", "LC", "LI", "LK", "LR", "LS",
      "LT", "LU", "LV", "LY", "MA", "MC", "MD", "ME", "MF", "MG", "MH", "MK",
      "ML", "MM", "MN", "MO", "MP", "MQ", "MR", "MS", "MT", "MU", "MV", "MW",
      "MX", "MY", "MZ", "NA", "NC", "NE", "NF", "NG", "NI", "NL", "NO", "NP",
      "NR", "NU", "NZ", "OM", "PA", "PE", "PF", "PG", "PH", "PK", "PL", "PM",
      "PN", "PR", "PS", "PT", "PW", "PY", "QA", "RE", "RO", "RS", "RU", "RW",
      "SA", "SB", "SC", "SD", "SE", "SG", "SH", "SI", "SJ", "SK", "SL", "SM",
      "SN", "SO", "SR", "SS", "ST", "SV", "SX", "SY", "SZ", "TC", "TD", "TF",
      "TG", "TH", "TJ", "TK", "TL", "TM", "TN", "TO", "TR", "TT", "TV", "TW",
      "TZ", "UA", "UG", "UM", "US", "UY", "UZ", "VA", "VC", "VE", "VG", "VI",
      "VN", "VU", "WF", "WS", "YE", "YT", "ZA", "ZM", "ZW"};
  return kCodes.count(code) > 0;
}

}  // namespace biblio::text
