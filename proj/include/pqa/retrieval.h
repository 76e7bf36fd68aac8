#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pqa/corpus.h"
#include "pqa/text.h"

namespace pqa {

struct RetrievedSentence {
  std::string doc_id;
  std::size_t position = 0;  // sentence index within its document
  double score = 0.0;
  Sentence sentence;

  // "doc_id#position"
  std::string ref() const { return doc_id + "#" + std::to_string(position); }
};

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

// Sentence-level inverted index scored with BM25. Terms are lowercased
// leaves with stopwords and punctuation removed; sentence length is the
// full leaf count.
class Index {
 public:
  struct Posting {
    std::size_t sentence;  // slot in ingestion order
    std::size_t tf;
  };

  static Index build(const std::vector<Document>& docs, Bm25Params params = {},
                     const StopwordSet& stopwords = StopwordSet::english());

  // Top k by score; ties by (doc_id, position) ascending. Only sentences
  // sharing at least one term with the query are returned.
  std::vector<RetrievedSentence> retrieve(const std::vector<std::string>& query_terms,
                                          std::size_t k) const;

  std::size_t sentence_count() const { return entries_.size(); }
  double avg_length() const { return avg_length_; }
  const Bm25Params& params() const { return params_; }
  const StopwordSet& stopwords() const { return stopwords_; }
  const std::vector<Posting>& postings(const std::string& term) const;

  // Deterministic JSON dump: {N, avg_length, k1, b, doc_lengths, postings}.
  std::string to_json() const;

 private:
  struct Entry {
    std::string doc_id;
    std::size_t position;
    std::size_t length;
    Sentence sentence;
  };

  std::vector<Entry> entries_;
  std::map<std::string, std::vector<Posting>> postings_;
  double avg_length_ = 0.0;
  Bm25Params params_;
  StopwordSet stopwords_;
};

// Content words of the question parse, deduplicated in first-seen order.
std::vector<std::string> question_query(const Question& question,
                                        const StopwordSet& stopwords = StopwordSet::english());

}  // namespace pqa
