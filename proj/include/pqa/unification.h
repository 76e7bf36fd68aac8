#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqa/knowledge.h"
#include "pqa/retrieval.h"
#include "pqa/similarity.h"
#include "pqa/treebank.h"

namespace pqa {

// Tag -> superclass. Tags missing from the table are their own class.
class TagHierarchy {
 public:
  TagHierarchy() = default;

  // NOUN, VERB, ADJ, ADV and WH groups over the Penn tagset.
  static const TagHierarchy& builtin();
  // "tag<TAB>superclass" lines.
  static TagHierarchy load(const std::string& path);

  void add(std::string tag, std::string superclass);
  const std::string& superclass(const std::string& tag) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

// a == b, or both share a superclass.
bool tag_compatible(const std::string& a, const std::string& b, const TagHierarchy& hierarchy);

struct RelaxConfig {
  bool enable_lexical = true;
  LexicalMeasure lexical_measure = LexicalMeasure::levenshtein;
  double lexical_threshold = 0.8;
  bool enable_syntactic = true;
  TagHierarchy hierarchy = TagHierarchy::builtin();

  bool any() const { return enable_lexical || enable_syntactic; }
};

enum class Relaxation { none, lexical, syntactic, both };
enum class Strategy { pattern, ner };

std::string to_string(Relaxation relaxation);
std::string to_string(Strategy strategy);

struct CandidateAnswer {
  std::string text;       // leaf tokens of [begin, end) joined by spaces
  std::size_t begin = 0;  // leaf indices
  std::size_t end = 0;
  Strategy strategy = Strategy::pattern;
  std::optional<std::size_t> pattern_id;
  Relaxation relaxation = Relaxation::none;
  std::size_t sentence = 0;  // position in the retrieved list it came from
};

// Which relaxations a single pass may use.
struct MatchMode {
  bool lexical = false;
  bool syntactic = false;
};

// One unification pass. The tree is explored top-down, left to right; each
// node in turn is tried as the first unit, and the remaining elements are
// aligned against consecutive units to its right. Lexical elements consume a
// leaf, syntactic and answer elements consume any node starting at the
// current position. Candidates are the answer-slot spans, deduplicated and
// ordered by position; each keeps the least relaxation that produced it.
std::vector<CandidateAnswer> match_pattern(const Pattern& pattern, const ParseTree& tree,
                                           const RelaxConfig& config, MatchMode mode);

// Exact pass, then a relaxed pass with the strategies enabled in `config`
// when the exact pass found nothing.
std::vector<CandidateAnswer> unify(const Pattern& pattern, const ParseTree& tree,
                                   const RelaxConfig& config);

// Every pattern against every sentence. The relaxed pass runs only if the
// exact pass yields nothing across all patterns and sentences. Output is
// ordered by (sentence, begin, end), one entry per span.
std::vector<CandidateAnswer> unify_all(const std::vector<Pattern>& patterns,
                                       const std::vector<RetrievedSentence>& sentences,
                                       const RelaxConfig& config);

}  // namespace pqa
