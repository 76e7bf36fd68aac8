#pragma once

#include <map>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pqa/category.h"
#include "pqa/retrieval.h"
#include "pqa/text.h"
#include "pqa/unification.h"

namespace pqa {

// category ("coarse:fine") -> normalized surface forms.
class Gazetteer {
 public:
  // "coarse:fine<TAB>surface form" lines.
  static Gazetteer load(const std::string& path);

  void add(const Category& category, const std::string& surface);
  const std::set<std::string>* forms(const Category& category) const;
  // Coarse classes under which a normalized form is listed.
  std::set<std::string> coarse_classes(const std::string& normalized) const;
  std::size_t size() const;

 private:
  std::map<std::string, std::set<std::string>> entries_;
  std::map<std::string, std::set<std::string>> coarse_of_;
};

// category -> expressions, matched against whole token spans joined by
// single spaces.
class RegexTable {
 public:
  struct Entry {
    std::string category;
    std::string source;
    std::regex expression;
  };

  static const RegexTable& builtin();
  // "coarse:fine<TAB>pattern" lines.
  static RegexTable load(const std::string& path);

  void add(const std::string& category, const std::string& pattern);
  // Entries for the exact category; all entries of the same coarse class
  // when the fine class has none.
  std::vector<const Entry*> for_category(const Category& category) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct NerOptions {
  std::size_t max_span = 8;
  const StopwordSet* stopwords = &StopwordSet::english();
};

// Baseline extractors dispatched on the coarse class:
//   NUM         regexes for the fine class
//   HUM/LOC/ENTY gazetteer hits for the exact class, plus maximal runs of
//               capitalized tokens (a sentence-initial stopword is dropped;
//               runs the gazetteer lists only under other coarse classes are
//               rejected)
//   DESC        nothing
//   ABBR        uppercase tokens inside parentheses
// Within one extractor spans never overlap (leftmost-longest). Output is
// ordered by (sentence, begin, end), one entry per span.
std::vector<CandidateAnswer> extract_ner(const Category& category,
                                         const std::vector<RetrievedSentence>& sentences,
                                         const Gazetteer& gazetteer,
                                         const RegexTable& regexes = RegexTable::builtin(),
                                         const NerOptions& options = {});

// Human-readable routing, emitted in run metadata.
std::vector<std::pair<std::string, std::string>> ner_routing();

}  // namespace pqa
