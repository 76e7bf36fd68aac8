#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pqa {

std::string to_lower(std::string_view text);

// Whitespace split, then trailing punctuation (. , ? ! ; :) peeled off into
// separate tokens. Corpus parses are authored to agree with this rule.
std::vector<std::string> tokenize(std::string_view text);

// Lowercase, strip punctuation, collapse whitespace, drop leading articles.
// Idempotent.
std::string normalize_answer(std::string_view text);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

bool is_punctuation_token(std::string_view token);

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::set<std::string> words) : words_(std::move(words)) {}

  static const StopwordSet& english();
  static StopwordSet load(const std::string& path);

  // Expects a lowercased word.
  bool contains(std::string_view word) const { return words_.count(std::string(word)) > 0; }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;
};

// Lowercased tokens that are neither stopwords nor punctuation.
std::vector<std::string> content_words(const std::vector<std::string>& tokens,
                                       const StopwordSet& stopwords = StopwordSet::english());

std::vector<std::string> split_lines(const std::string& path);

}  // namespace pqa
