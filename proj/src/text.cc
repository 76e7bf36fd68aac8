#include "pqa/text.h"

#include <cctype>
#include <fstream>

#include "pqa/error.h"

namespace pqa {

namespace {

constexpr std::string_view kTrailingPunct = ".,?!;:";

const char* const kEnglishStopwords[] = {
    "a",     "an",    "the",   "of",    "in",    "on",    "at",    "to",    "for",
    "from",  "by",    "with",  "and",   "or",    "but",   "is",    "are",   "was",
    "were",  "be",    "been",  "has",   "have",  "had",   "do",    "does",  "did",
    "will",  "would", "can",   "could", "it",    "its",   "this",  "that",  "these",
    "those", "who",   "whom",  "whose", "what",  "which", "when",  "where", "why",
    "how",   "as",    "not",   "he",    "she",   "they",  "his",   "her",   "their",
};

bool is_article(std::string_view word) {
  return word == "a" || word == "an" || word == "the";
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) break;
    std::string_view word = text.substr(start, i - start);
    std::vector<std::string> peeled;
    while (word.size() > 1 && kTrailingPunct.find(word.back()) != std::string_view::npos) {
      peeled.emplace_back(1, word.back());
      word.remove_suffix(1);
    }
    tokens.emplace_back(word);
    tokens.insert(tokens.end(), peeled.rbegin(), peeled.rend());
  }
  return tokens;
}

std::string normalize_answer(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else if (!std::ispunct(u)) {
      current.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));

  std::size_t first = 0;
  while (words.size() - first > 1 && is_article(words[first])) ++first;

  std::string out;
  for (std::size_t k = first; k < words.size(); ++k) {
    if (!out.empty()) out.push_back(' ');
    out += words[k];
  }
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  if (token == "-LRB-" || token == "-RRB-" || token == "``" || token == "''") return true;
  for (char c : token) {
    if (!std::ispunct(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

const StopwordSet& StopwordSet::english() {
  static const StopwordSet set(
      std::set<std::string>(std::begin(kEnglishStopwords), std::end(kEnglishStopwords)));
  return set;
}

StopwordSet StopwordSet::load(const std::string& path) {
  std::set<std::string> words;
  for (const auto& line : split_lines(path)) {
    auto word = to_lower(line);
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.pop_back();
    if (word.empty() || word[0] == '#') continue;
    words.insert(word);
  }
  return StopwordSet(std::move(words));
}

std::vector<std::string> content_words(const std::vector<std::string>& tokens,
                                       const StopwordSet& stopwords) {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    if (is_punctuation_token(token)) continue;
    auto lower = to_lower(token);
    if (stopwords.contains(lower)) continue;
    out.push_back(std::move(lower));
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace pqa
