#include "pqa/corpus.h"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "pqa/error.h"
#include "pqa/text.h"

namespace pqa {

using nlohmann::json;

namespace {

const json& require(const json& record, const char* field, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) throw DataError(std::string("missing field '") + field + "'", line);
  return *it;
}

std::string require_string(const json& record, const char* field, std::size_t line) {
  const json& value = require(record, field, line);
  if (!value.is_string()) throw DataError(std::string("field '") + field + "' must be a string", line);
  return value.get<std::string>();
}

ParseTree parse_field(const std::string& text, std::size_t line) {
  try {
    return parse_bracketed(text);
  } catch (const FormatError& e) {
    throw DataError(std::string("bad parse: ") + e.what(), line);
  }
}

template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DataError(std::string("malformed JSON: ") + e.what(), line);
    }
    if (!record.is_object()) throw DataError("record must be a JSON object", line);
    fn(record, line);
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

}  // namespace

std::vector<Question> read_qa_corpus(std::istream& in) {
  std::vector<Question> questions;
  std::set<std::string> seen;
  for_each_record(in, [&](const json& record, std::size_t line) {
    Question q;
    q.id = require_string(record, "id", line);
    if (q.id.empty()) throw DataError("empty id", line);
    if (!seen.insert(q.id).second) throw DataError("duplicate id '" + q.id + "'", line);
    q.text = require_string(record, "question", line);
    q.parse = parse_field(require_string(record, "parse", line), line);

    if (auto it = record.find("category"); it != record.end() && !it->is_null()) {
      if (!it->is_string()) throw DataError("field 'category' must be a string", line);
      q.category = Category::parse(it->get<std::string>());
      if (!q.category) throw DataError("unknown category '" + it->get<std::string>() + "'", line);
    }

    const json& answers = require(record, "answers", line);
    if (!answers.is_array()) throw DataError("field 'answers' must be an array", line);
    for (const auto& a : answers) {
      if (!a.is_string() || a.get<std::string>().empty())
        throw DataError("answers must be non-empty strings", line);
      q.answers.push_back(a.get<std::string>());
    }
    if (q.answers.empty()) throw DataError("question '" + q.id + "' has no answers", line);

    auto expected = tokenize(q.text);
    auto actual = leaves(q.parse);
    bool same = expected.size() == actual.size();
    for (std::size_t i = 0; same && i < actual.size(); ++i) {
      same = to_lower(expected[i]) == to_lower(actual[i]);
    }
    if (!same) throw DataError("parse leaves do not match question text for '" + q.id + "'", line);

    questions.push_back(std::move(q));
  });
  return questions;
}

std::vector<Question> load_qa_corpus(const std::string& path) {
  auto in = open(path);
  return read_qa_corpus(in);
}

std::vector<Document> read_documents(std::istream& in) {
  std::vector<Document> docs;
  std::set<std::string> seen;
  for_each_record(in, [&](const json& record, std::size_t line) {
    Document doc;
    doc.doc_id = require_string(record, "doc_id", line);
    if (!seen.insert(doc.doc_id).second)
      throw DataError("duplicate doc_id '" + doc.doc_id + "'", line);
    const json& sentences = require(record, "sentences", line);
    if (!sentences.is_array()) throw DataError("field 'sentences' must be an array", line);
    for (const auto& s : sentences) {
      if (!s.is_object()) throw DataError("sentence must be an object", line);
      Sentence sentence;
      sentence.text = require_string(s, "text", line);
      sentence.parse = parse_field(require_string(s, "parse", line), line);
      doc.sentences.push_back(std::move(sentence));
    }
    docs.push_back(std::move(doc));
  });
  return docs;
}

std::vector<Document> load_documents(const std::string& path) {
  auto in = open(path);
  return read_documents(in);
}

bool matches_reference(const std::string& candidate, const std::vector<std::string>& references) {
  auto norm = normalize_answer(candidate);
  for (const auto& r : references) {
    if (normalize_answer(r) == norm) return true;
  }
  return false;
}

}  // namespace pqa
