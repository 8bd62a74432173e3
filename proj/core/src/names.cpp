#include "namescan/names.hpp"

#include <array>
#include <cstdint>
#include <vector>

#include "namescan/errors.hpp"

namespace namescan {
namespace {

// Latin-1 Supplement letters, codepoints 0xC0..0xFF -> ASCII base letters.
// Case is preserved here; the uppercase step runs afterwards.
constexpr std::array<const char*, 0x40> kLatin1 = {
    "A",  "A",  "A",  "A", "A", "A", "AE", "C",   // C0 À Á Â Ã Ä Å Æ Ç
    "E",  "E",  "E",  "E", "I", "I", "I",  "I",   // C8 È É Ê Ë Ì Í Î Ï
    "D",  "N",  "O",  "O", "O", "O", "O",  "",    // D0 Ð Ñ Ò Ó Ô Õ Ö ×
    "O",  "U",  "U",  "U", "U", "Y", "TH", "ss",  // D8 Ø Ù Ú Û Ü Ý Þ ß
    "a",  "a",  "a",  "a", "a", "a", "ae", "c",   // E0 à á â ã ä å æ ç
    "e",  "e",  "e",  "e", "i", "i", "i",  "i",   // E8 è é ê ë ì í î ï
    "d",  "n",  "o",  "o", "o", "o", "o",  "",    // F0 ð ñ ò ó ô õ ö ÷
    "o",  "u",  "u",  "u", "u", "y", "th", "y",   // F8 ø ù ú û ü ý þ ÿ
};

// Latin Extended-A, codepoints 0x100..0x17F.
constexpr std::array<const char*, 0x80> kLatinExtA = {
    "A", "a", "A", "a", "A", "a", "C",  "c",   // 100 Ā ā Ă ă Ą ą Ć ć
    "C", "c", "C", "c", "C", "c", "D",  "d",   // 108 Ĉ ĉ Ċ ċ Č č Ď ď
    "D", "d", "E", "e", "E", "e", "E",  "e",   // 110 Đ đ Ē ē Ĕ ĕ Ė ė
    "E", "e", "E", "e", "G", "g", "G",  "g",   // 118 Ę ę Ě ě Ĝ ĝ Ğ ğ
    "G", "g", "G", "g", "H", "h", "H",  "h",   // 120 Ġ ġ Ģ ģ Ĥ ĥ Ħ ħ
    "I", "i", "I", "i", "I", "i", "I",  "i",   // 128 Ĩ ĩ Ī ī Ĭ ĭ Į į
    "I", "i", "IJ", "ij", "J", "j", "K", "k",  // 130 İ ı Ĳ ĳ Ĵ ĵ Ķ ķ
    "k", "L", "l", "L", "l", "L", "l",  "L",   // 138 ĸ Ĺ ĺ Ļ ļ Ľ ľ Ŀ
    "l", "L", "l", "N", "n", "N", "n",  "N",   // 140 ŀ Ł ł Ń ń Ņ ņ Ň
    "n", "n", "N", "n", "O", "o", "O",  "o",   // 148 ň ŉ Ŋ ŋ Ō ō Ŏ ŏ
    "O", "o", "OE", "oe", "R", "r", "R", "r",  // 150 Ő ő Œ œ Ŕ ŕ Ŗ ŗ
    "R", "r", "S", "s", "S", "s", "S",  "s",   // 158 Ř ř Ś ś Ŝ ŝ Ş ş
    "S", "s", "T", "t", "T", "t", "T",  "t",   // 160 Š š Ţ ţ Ť ť Ŧ ŧ
    "U", "u", "U", "u", "U", "u", "U",  "u",   // 168 Ũ ũ Ū ū Ŭ ŭ Ů ů
    "U", "u", "U", "u", "W", "w", "Y",  "y",   // 170 Ű ű Ų ų Ŵ ŵ Ŷ ŷ
    "Y", "Z", "z", "Z", "z", "Z", "z",  "s",   // 178 Ÿ Ź ź Ż ż Ž ž ſ
};

// ASCII transliteration of one codepoint, or nullptr when the codepoint
// has no Latin base letter (it is dropped).
const char* latin_base(std::uint32_t cp) {
  if (cp >= 0xC0 && cp <= 0xFF) return kLatin1[cp - 0xC0];
  if (cp >= 0x100 && cp <= 0x17F) return kLatinExtA[cp - 0x100];
  return nullptr;
}

bool is_hyphen(std::uint32_t cp) {
  // ASCII hyphen-minus plus the Unicode hyphen/dash block U+2010..U+2015.
  return cp == '-' || (cp >= 0x2010 && cp <= 0x2015);
}

// Lenient UTF-8 decode; bytes that do not form a valid sequence are taken
// as Latin-1, so mixed-encoding exports still normalize sensibly.
std::vector<std::uint32_t> decode_utf8(std::string_view s) {
  std::vector<std::uint32_t> cps;
  cps.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      cps.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    std::uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= s.size();
    if (ok) {
      for (int k = 1; k < len; ++k) {
        unsigned char bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0) != 0x80) {
          ok = false;
          break;
        }
        cp = (cp << 6) | (bk & 0x3F);
      }
    }
    if (ok) {
      cps.push_back(cp);
      i += len;
    } else {
      cps.push_back(b0);  // Latin-1 fallback
      ++i;
    }
  }
  return cps;
}

}  // namespace

std::string normalize_name(std::string_view raw,
                           const NormalizationPolicy& policy) {
  std::vector<std::uint32_t> cps = decode_utf8(raw);

  if (policy.drop_parenthetical) {
    std::vector<std::uint32_t> kept;
    kept.reserve(cps.size());
    int depth = 0;
    for (std::uint32_t cp : cps) {
      if (cp == '(') {
        ++depth;
      } else if (cp == ')') {
        if (depth > 0) --depth;
      } else if (depth == 0) {
        kept.push_back(cp);
      }
    }
    cps = std::move(kept);
  }

  if (policy.hyphen_keep_first) {
    for (std::size_t i = 0; i < cps.size(); ++i) {
      if (is_hyphen(cps[i])) {
        cps.resize(i);
        break;
      }
    }
  }

  std::string out;
  out.reserve(cps.size());
  char ascii[2] = {0, 0};
  for (std::uint32_t cp : cps) {
    const char* mapped;
    if (cp < 0x80) {
      ascii[0] = static_cast<char>(cp);
      mapped = ascii;
    } else {
      mapped = latin_base(cp);
      if (!mapped) continue;  // no Latin base letter; drop
    }
    for (const char* p = mapped; *p; ++p) {
      char c = *p;
      if (policy.uppercase && c >= 'a' && c <= 'z') c = char(c - 'a' + 'A');
      if (policy.strip_non_letters &&
          !((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')))
        continue;
      out.push_back(c);
    }
  }

  if (out.empty()) throw EmptyAfterNormalization(std::string(raw));
  return out;
}

std::string normalize_initials(std::string_view raw) {
  std::string out;
  for (std::uint32_t cp : decode_utf8(raw)) {
    const char* mapped;
    char ascii[2] = {0, 0};
    if (cp < 0x80) {
      ascii[0] = static_cast<char>(cp);
      mapped = ascii;
    } else {
      mapped = latin_base(cp);
      if (!mapped) continue;
    }
    for (const char* p = mapped; *p; ++p) {
      char c = *p;
      if (c >= 'a' && c <= 'z') c = char(c - 'a' + 'A');
      if (c >= 'A' && c <= 'Z') out.push_back(c);
    }
  }
  return out;
}

}  // namespace namescan
