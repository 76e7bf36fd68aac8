#include "pqa/retrieval.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace pqa {

Index Index::build(const std::vector<Document>& docs, Bm25Params params,
                   const StopwordSet& stopwords) {
  Index index;
  index.params_ = params;
  index.stopwords_ = stopwords;
  std::size_t total_length = 0;
  for (const auto& doc : docs) {
    for (std::size_t pos = 0; pos < doc.sentences.size(); ++pos) {
      const auto& sentence = doc.sentences[pos];
      auto tokens = leaves(sentence.parse);
      std::size_t slot = index.entries_.size();
      index.entries_.push_back({doc.doc_id, pos, tokens.size(), sentence});
      total_length += tokens.size();

      std::map<std::string, std::size_t> tf;
      for (auto& term : content_words(tokens, stopwords)) ++tf[term];
      for (const auto& [term, count] : tf) index.postings_[term].push_back({slot, count});
    }
  }
  if (!index.entries_.empty()) {
    index.avg_length_ = static_cast<double>(total_length) / static_cast<double>(index.entries_.size());
  }
  return index;
}

const std::vector<Index::Posting>& Index::postings(const std::string& term) const {
  static const std::vector<Posting> kEmpty;
  auto it = postings_.find(term);
  return it == postings_.end() ? kEmpty : it->second;
}

std::vector<RetrievedSentence> Index::retrieve(const std::vector<std::string>& query_terms,
                                               std::size_t k) const {
  if (k == 0 || entries_.empty()) return {};
  const double n = static_cast<double>(entries_.size());
  std::map<std::size_t, double> scores;
  std::set<std::string> seen;
  for (const auto& raw : query_terms) {
    auto term = to_lower(raw);
    if (!seen.insert(term).second) continue;
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double df = static_cast<double>(it->second.size());
    const double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
    for (const auto& p : it->second) {
      const double tf = static_cast<double>(p.tf);
      const double len = static_cast<double>(entries_[p.sentence].length);
      const double norm = params_.k1 * (1.0 - params_.b + params_.b * len / avg_length_);
      scores[p.sentence] += idf * tf * (params_.k1 + 1.0) / (tf + norm);
    }
  }

  std::vector<std::pair<std::size_t, double>> ranked(scores.begin(), scores.end());
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    const auto& ea = entries_[a.first];
    const auto& eb = entries_[b.first];
    if (ea.doc_id != eb.doc_id) return ea.doc_id < eb.doc_id;
    return ea.position < eb.position;
  });
  if (ranked.size() > k) ranked.resize(k);

  std::vector<RetrievedSentence> out;
  out.reserve(ranked.size());
  for (const auto& [slot, score] : ranked) {
    const auto& e = entries_[slot];
    out.push_back({e.doc_id, e.position, score, e.sentence});
  }
  return out;
}

std::string Index::to_json() const {
  nlohmann::json j;
  j["N"] = entries_.size();
  j["avg_length"] = avg_length_;
  j["k1"] = params_.k1;
  j["b"] = params_.b;
  auto& lengths = j["doc_lengths"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    lengths.push_back({{"ref", e.doc_id + "#" + std::to_string(e.position)}, {"length", e.length}});
  }
  auto& postings = j["postings"] = nlohmann::json::object();
  for (const auto& [term, list] : postings_) {
    auto& arr = postings[term] = nlohmann::json::array();
    for (const auto& p : list) arr.push_back({p.sentence, p.tf});
  }
  return j.dump(2);
}

std::vector<std::string> question_query(const Question& question, const StopwordSet& stopwords) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& w : content_words(leaves(question.parse), stopwords)) {
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace pqa
