#pragma once

#include <string>
#include <string_view>

namespace namescan {

// Canonicalization switches. Rules always apply in this order:
//   1. drop_parenthetical  — remove "(...)" spans (annotations, former names)
//   2. hyphen_keep_first   — keep only the part before the first hyphen
//   3. transliterate + uppercase — accents fold to base letters (É->E, ß->SS)
//   4. strip_non_letters   — drop anything still outside A-Z
// Order matters: a hyphen inside a parenthetical must not split the name.
struct NormalizationPolicy {
  bool drop_parenthetical = true;
  bool hyphen_keep_first = true;
  bool uppercase = true;
  bool strip_non_letters = true;

  static NormalizationPolicy none() { return {false, false, false, false}; }

  bool operator==(const NormalizationPolicy&) const = default;
};

// Canonical key for a raw name under the given policy. Idempotent:
// normalize(normalize(x)) == normalize(x) for any fixed policy.
// Throws EmptyAfterNormalization if nothing survives.
std::string normalize_name(std::string_view raw,
                           const NormalizationPolicy& policy = {});

// Letters-only uppercase initials ("J.K." -> "JK"). Never throws;
// returns "" when no letter is present.
std::string normalize_initials(std::string_view raw);

}  // namespace namescan
