#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "pqa/category.h"
#include "pqa/treebank.h"

namespace pqa {

struct Question {
  std::string id;
  std::string text;
  ParseTree parse;
  std::optional<Category> category;  // gold label, when the corpus has one
  std::vector<std::string> answers;
};

struct Sentence {
  std::string text;
  ParseTree parse;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
};

// JSON Lines, one {id, question, parse, category?, answers[]} per line.
// Blank lines are skipped. File order is preserved. Throws DataError naming
// the offending line.
std::vector<Question> load_qa_corpus(const std::string& path);
std::vector<Question> read_qa_corpus(std::istream& in);

// JSON Lines, one {doc_id, sentences:[{text, parse}]} per line.
std::vector<Document> load_documents(const std::string& path);
std::vector<Document> read_documents(std::istream& in);

// True iff normalize_answer(candidate) equals the normalized form of some
// reference.
bool matches_reference(const std::string& candidate, const std::vector<std::string>& references);

}  // namespace pqa
