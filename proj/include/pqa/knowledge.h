#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqa/category.h"
#include "pqa/corpus.h"
#include "pqa/retrieval.h"
#include "pqa/stemmer.h"
#include "pqa/text.h"

namespace pqa {

struct PatternElement {
  enum class Kind { lexical, syntactic, answer };

  Kind kind = Kind::lexical;
  std::string value;  // lowercased token for lexical, tag otherwise

  static PatternElement lexical(std::string token) { return {Kind::lexical, std::move(token)}; }
  static PatternElement syntactic(std::string tag) { return {Kind::syntactic, std::move(tag)}; }
  static PatternElement answer(std::string tag) { return {Kind::answer, std::move(tag)}; }

  friend auto operator<=>(const PatternElement&, const PatternElement&) = default;
};

// "has", "VBN", "NP_answer"
std::string to_string(const PatternElement& element);

struct Signature {
  Category category;
  std::string structure_key;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct Provenance {
  std::string question_id;
  std::string sentence_ref;

  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

struct Pattern {
  std::size_t id = 0;  // assigned by the knowledge base
  std::vector<PatternElement> elements;
  Signature signature;
  std::vector<Provenance> provenance;

  std::size_t answer_index() const;
  bool learned_from(const std::string& question_id) const;
  // "NP_answer has VBN NP"
  std::string str() const;
};

// Throws DataError unless the pattern has exactly one answer slot, at least
// one other element and no empty tokens or tags.
void validate(const Pattern& pattern);

constexpr std::size_t kStructureDepth = 2;
constexpr std::size_t kMaxPatternLength = 12;

// Wh-word (lowercased, "-" when absent) + '|' + preorder labels of nodes at
// depth <= `depth`.
std::string structure_key(const ParseTree& parse, std::size_t depth = kStructureDepth);
Signature question_signature(const Question& question, const Category& category,
                             std::size_t depth = kStructureDepth);

struct LearnOptions {
  std::size_t max_length = kMaxPatternLength;
  std::size_t structure_depth = kStructureDepth;
  const StopwordSet* stopwords = &StopwordSet::english();
  const IrregularForms* irregular = &IrregularForms::builtin();
};

// One pattern per sentence that contains the answer as a constituent and at
// least one question phrase. The pattern spans from the leftmost to the
// rightmost of those constituents; the answer becomes an answer slot, each
// question phrase a syntactic slot, tokens sharing a stem with a question
// content word their POS tag, and everything else stays lexical.
// Duplicate element sequences are merged with their provenance.
std::vector<Pattern> learn_patterns(const Question& question, const Category& category,
                                    const std::string& answer,
                                    const std::vector<RetrievedSentence>& sentences,
                                    const LearnOptions& options = {});

class KnowledgeBase {
 public:
  // Set-union per signature, deduplicated by elements. Provenance of a
  // duplicate is merged into the stored pattern. Returns the number of
  // patterns that were new.
  std::size_t insert(const std::vector<Pattern>& patterns);

  // Insertion order; empty for unseen signatures.
  std::vector<Pattern> lookup(const Signature& signature) const;
  // As lookup, minus patterns whose provenance names question_id.
  std::vector<Pattern> lookup_excluding(const Signature& signature,
                                        const std::string& question_id) const;

  void record_qa_pair(std::string question_id, std::string answer);
  const std::vector<std::pair<std::string, std::string>>& qa_pairs() const { return qa_pairs_; }

  std::size_t pattern_count() const;
  const std::vector<Signature>& signatures() const { return signature_order_; }

  std::string to_json() const;
  static KnowledgeBase from_json(const std::string& text);
  void save(const std::string& path) const;
  static KnowledgeBase load(const std::string& path);

 private:
  std::map<Signature, std::vector<Pattern>> patterns_;
  std::vector<Signature> signature_order_;
  std::vector<std::pair<std::string, std::string>> qa_pairs_;
  std::size_t next_id_ = 0;
};

}  // namespace pqa
