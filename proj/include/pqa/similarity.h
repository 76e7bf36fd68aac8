#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace pqa {

enum class LexicalMeasure { levenshtein, overlap, jaccard };

std::string to_string(LexicalMeasure measure);
std::optional<LexicalMeasure> parse_measure(std::string_view name);

// levenshtein 0.8, overlap 0.6, jaccard 0.5
double default_threshold(LexicalMeasure measure);

// Decodes UTF-8; invalid bytes are taken as single code units.
std::u32string decode_utf8(std::string_view text);

// Unit-cost edit distance over code points.
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// In [0, 1]. levenshtein: 1 - d / max(|a|, |b|), 1 when both are empty.
// overlap: |A & B| / min(|A|, |B|) over character bigram sets, 1 when either
// set is empty. jaccard: |A & B| / |A | B| over bigram sets, 1 when both are
// empty. Case-sensitive; callers lowercase first.
double lexical_similarity(std::string_view a, std::string_view b, LexicalMeasure measure);

}  // namespace pqa
