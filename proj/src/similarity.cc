#include "pqa/similarity.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace pqa {

std::string to_string(LexicalMeasure measure) {
  switch (measure) {
    case LexicalMeasure::levenshtein:
      return "levenshtein";
    case LexicalMeasure::overlap:
      return "overlap";
    case LexicalMeasure::jaccard:
      return "jaccard";
  }
  return "levenshtein";
}

std::optional<LexicalMeasure> parse_measure(std::string_view name) {
  if (name == "levenshtein") return LexicalMeasure::levenshtein;
  if (name == "overlap") return LexicalMeasure::overlap;
  if (name == "jaccard") return LexicalMeasure::jaccard;
  return std::nullopt;
}

double default_threshold(LexicalMeasure measure) {
  switch (measure) {
    case LexicalMeasure::levenshtein:
      return 0.8;
    case LexicalMeasure::overlap:
      return 0.6;
    case LexicalMeasure::jaccard:
      return 0.5;
  }
  return 0.8;
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    std::size_t extra = c >= 0xF0 ? 3 : c >= 0xE0 ? 2 : c >= 0xC0 ? 1 : 0;
    bool ok = extra > 0 && i + extra < text.size();
    char32_t cp = extra == 1 ? (c & 0x1F) : extra == 2 ? (c & 0x0F) : (c & 0x07);
    for (std::size_t k = 1; ok && k <= extra; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      ok = (cc & 0xC0) == 0x80;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (ok) {
      out.push_back(cp);
      i += extra + 1;
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  auto s = decode_utf8(a);
  auto t = decode_utf8(b);
  if (s.size() < t.size()) std::swap(s, t);
  std::vector<std::size_t> prev(t.size() + 1);
  std::vector<std::size_t> cur(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      std::size_t sub = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[t.size()];
}

namespace {

std::set<std::pair<char32_t, char32_t>> bigrams(std::string_view text) {
  auto cps = decode_utf8(text);
  std::set<std::pair<char32_t, char32_t>> out;
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) out.emplace(cps[i], cps[i + 1]);
  return out;
}

std::size_t intersection_size(const std::set<std::pair<char32_t, char32_t>>& x,
                              const std::set<std::pair<char32_t, char32_t>>& y) {
  std::size_t n = 0;
  for (const auto& g : x) n += y.count(g);
  return n;
}

}  // namespace

double lexical_similarity(std::string_view a, std::string_view b, LexicalMeasure measure) {
  switch (measure) {
    case LexicalMeasure::levenshtein: {
      std::size_t longest = std::max(decode_utf8(a).size(), decode_utf8(b).size());
      if (longest == 0) return 1.0;
      return 1.0 - static_cast<double>(levenshtein_distance(a, b)) / static_cast<double>(longest);
    }
    case LexicalMeasure::overlap: {
      auto x = bigrams(a);
      auto y = bigrams(b);
      if (x.empty() || y.empty()) return 1.0;
      return static_cast<double>(intersection_size(x, y)) /
             static_cast<double>(std::min(x.size(), y.size()));
    }
    case LexicalMeasure::jaccard: {
      auto x = bigrams(a);
      auto y = bigrams(b);
      if (x.empty() && y.empty()) return 1.0;
      std::size_t common = intersection_size(x, y);
      return static_cast<double>(common) / static_cast<double>(x.size() + y.size() - common);
    }
  }
  return 0.0;
}

}  // namespace pqa
