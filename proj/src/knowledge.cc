#include "pqa/knowledge.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pqa/error.h"

namespace pqa {

using nlohmann::json;

std::string to_string(const PatternElement& element) {
  switch (element.kind) {
    case PatternElement::Kind::lexical:
      return element.value;
    case PatternElement::Kind::syntactic:
      return element.value;
    case PatternElement::Kind::answer:
      return element.value + "_answer";
  }
  return element.value;
}

std::size_t Pattern::answer_index() const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].kind == PatternElement::Kind::answer) return i;
  }
  return elements.size();
}

bool Pattern::learned_from(const std::string& question_id) const {
  return std::any_of(provenance.begin(), provenance.end(),
                     [&](const Provenance& p) { return p.question_id == question_id; });
}

std::string Pattern::str() const {
  std::string out;
  for (const auto& e : elements) {
    if (!out.empty()) out.push_back(' ');
    out += to_string(e);
  }
  return out;
}

void validate(const Pattern& pattern) {
  std::size_t slots = 0;
  for (const auto& e : pattern.elements) {
    if (e.value.empty()) throw DataError("pattern element with empty token or tag");
    if (e.kind == PatternElement::Kind::answer) ++slots;
  }
  if (slots != 1) throw DataError("pattern must have exactly one answer slot: " + pattern.str());
  if (pattern.elements.size() < 2) throw DataError("pattern needs at least two elements: " + pattern.str());
}

namespace {

bool is_wh_word(const std::string& w) {
  return w == "who" || w == "whom" || w == "whose" || w == "what" || w == "which" ||
         w == "when" || w == "where" || w == "why" || w == "how";
}

bool is_clause_label(const std::string& label) {
  return label == "S" || label == "SQ" || label == "SBAR" || label == "SBARQ" || label == "SINV";
}

struct Span {
  std::size_t begin;
  std::size_t end;

  bool overlaps(const Span& o) const { return begin < o.end && o.begin < end; }
};

// Sentence-side view: spans plus normalized surface text of every node.
struct SentenceView {
  std::vector<std::string> tokens;
  std::vector<SpannedNode> nodes;
  std::vector<std::string> normalized;

  explicit SentenceView(const ParseTree& tree) : tokens(leaves(tree)), nodes(spanned_nodes(tree)) {
    normalized.reserve(nodes.size());
    for (const auto& n : nodes) {
      std::vector<std::string> part(tokens.begin() + static_cast<std::ptrdiff_t>(n.begin),
                                    tokens.begin() + static_cast<std::ptrdiff_t>(n.end));
      normalized.push_back(normalize_answer(join(part)));
    }
  }

  // First node in preorder whose text normalizes to `text` and whose span
  // avoids every span in `taken`.
  std::optional<Span> find(const std::string& text, const std::vector<Span>& taken) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (normalized[i] != text) continue;
      Span s{nodes[i].begin, nodes[i].end};
      bool clear = std::none_of(taken.begin(), taken.end(), [&](const Span& t) { return t.overlaps(s); });
      if (clear) return s;
    }
    return std::nullopt;
  }

  // Label of the lowest phrasal node spanning exactly `span`; the tag when
  // only the preterminal does.
  std::string label_for(const Span& span) const {
    std::string phrasal;
    std::string tag;
    for (const auto& n : nodes) {
      if (n.begin != span.begin || n.end != span.end) continue;
      if (n.node->is_leaf()) {
        tag = n.node->label();
      } else {
        phrasal = n.node->label();
      }
    }
    return phrasal.empty() ? tag : phrasal;
  }
};

// Maximal question constituents (outside the wh-phrase and above no clause)
// that reappear as sentence constituents.
void match_question_phrases(const ParseTree& qnode, bool is_root, const SentenceView& sentence,
                            const StopwordSet& stopwords, std::vector<Span>& taken,
                            std::vector<Span>& matched) {
  const std::string& label = qnode.label();
  if (label.starts_with("WH")) return;
  if (!is_root && !is_clause_label(label)) {
    auto words = leaves(qnode);
    if (content_words(words, stopwords).empty()) return;
    if (auto hit = sentence.find(normalize_answer(join(words)), taken)) {
      taken.push_back(*hit);
      matched.push_back(*hit);
      return;
    }
  }
  for (const auto& child : qnode.children()) {
    match_question_phrases(child, false, sentence, stopwords, taken, matched);
  }
}

std::optional<std::vector<PatternElement>> learn_from_sentence(
    const Question& question, const std::string& target, const std::set<std::string>& stems,
    const ParseTree& tree, const LearnOptions& options) {
  SentenceView view(tree);
  auto answer_span = view.find(target, {});
  if (!answer_span) return std::nullopt;

  std::vector<Span> taken{*answer_span};
  std::vector<Span> phrases;
  match_question_phrases(question.parse, true, view, *options.stopwords, taken, phrases);
  if (phrases.empty()) return std::nullopt;

  Span cover = *answer_span;
  for (const auto& p : phrases) {
    cover.begin = std::min(cover.begin, p.begin);
    cover.end = std::max(cover.end, p.end);
  }

  std::vector<const SpannedNode*> leaf_at(view.tokens.size(), nullptr);
  for (const auto& n : view.nodes) {
    if (n.node->is_leaf()) leaf_at[n.begin] = &n;
  }

  std::vector<PatternElement> elements;
  std::size_t pos = cover.begin;
  while (pos < cover.end) {
    if (pos == answer_span->begin) {
      elements.push_back(PatternElement::answer(view.label_for(*answer_span)));
      pos = answer_span->end;
      continue;
    }
    auto phrase = std::find_if(phrases.begin(), phrases.end(), [&](const Span& p) { return p.begin == pos; });
    if (phrase != phrases.end()) {
      elements.push_back(PatternElement::syntactic(view.label_for(*phrase)));
      pos = phrase->end;
      continue;
    }
    const std::string& token = view.tokens[pos];
    if (stems.count(stem(token, *options.irregular)) > 0) {
      elements.push_back(PatternElement::syntactic(leaf_at[pos]->node->label()));
    } else {
      elements.push_back(PatternElement::lexical(to_lower(token)));
    }
    ++pos;
  }
  if (elements.size() > options.max_length || elements.size() < 2) return std::nullopt;
  return elements;
}

}  // namespace

std::string structure_key(const ParseTree& parse, std::size_t depth) {
  std::string wh = "-";
  for (const auto& token : leaves(parse)) {
    auto lower = to_lower(token);
    if (is_wh_word(lower)) {
      wh = lower;
      break;
    }
  }
  std::string key = wh + "|";
  bool first = true;
  for (const auto& n : spanned_nodes(parse)) {
    if (n.depth > depth) continue;
    if (!first) key.push_back(' ');
    key += n.node->label();
    first = false;
  }
  return key;
}

Signature question_signature(const Question& question, const Category& category, std::size_t depth) {
  return Signature{category, structure_key(question.parse, depth)};
}

std::vector<Pattern> learn_patterns(const Question& question, const Category& category,
                                    const std::string& answer,
                                    const std::vector<RetrievedSentence>& sentences,
                                    const LearnOptions& options) {
  auto target = normalize_answer(answer);
  if (target.empty()) return {};

  std::set<std::string> stems;
  for (const auto& w : content_words(leaves(question.parse), *options.stopwords)) {
    stems.insert(stem(w, *options.irregular));
  }
  Signature signature = question_signature(question, category, options.structure_depth);

  std::vector<Pattern> out;
  for (const auto& rs : sentences) {
    auto elements = learn_from_sentence(question, target, stems, rs.sentence.parse, options);
    if (!elements) continue;
    Provenance prov{question.id, rs.ref()};
    auto it = std::find_if(out.begin(), out.end(), [&](const Pattern& p) { return p.elements == *elements; });
    if (it != out.end()) {
      if (std::find(it->provenance.begin(), it->provenance.end(), prov) == it->provenance.end())
        it->provenance.push_back(prov);
      continue;
    }
    Pattern p;
    p.elements = std::move(*elements);
    p.signature = signature;
    p.provenance.push_back(std::move(prov));
    out.push_back(std::move(p));
  }
  for (auto& p : out) std::sort(p.provenance.begin(), p.provenance.end());
  return out;
}

std::size_t KnowledgeBase::insert(const std::vector<Pattern>& patterns) {
  std::size_t added = 0;
  for (const auto& pattern : patterns) {
    validate(pattern);
    auto [slot, fresh] = patterns_.try_emplace(pattern.signature);
    if (fresh) signature_order_.push_back(pattern.signature);
    auto& bucket = slot->second;
    auto it = std::find_if(bucket.begin(), bucket.end(),
                           [&](const Pattern& p) { return p.elements == pattern.elements; });
    if (it != bucket.end()) {
      for (const auto& prov : pattern.provenance) {
        if (std::find(it->provenance.begin(), it->provenance.end(), prov) == it->provenance.end())
          it->provenance.push_back(prov);
      }
      continue;
    }
    Pattern stored = pattern;
    stored.id = next_id_++;
    bucket.push_back(std::move(stored));
    ++added;
  }
  return added;
}

std::vector<Pattern> KnowledgeBase::lookup(const Signature& signature) const {
  auto it = patterns_.find(signature);
  return it == patterns_.end() ? std::vector<Pattern>{} : it->second;
}

std::vector<Pattern> KnowledgeBase::lookup_excluding(const Signature& signature,
                                                     const std::string& question_id) const {
  std::vector<Pattern> out;
  for (auto& p : lookup(signature)) {
    if (!p.learned_from(question_id)) out.push_back(std::move(p));
  }
  return out;
}

void KnowledgeBase::record_qa_pair(std::string question_id, std::string answer) {
  qa_pairs_.emplace_back(std::move(question_id), std::move(answer));
}

std::size_t KnowledgeBase::pattern_count() const {
  std::size_t n = 0;
  for (const auto& [sig, bucket] : patterns_) n += bucket.size();
  return n;
}

namespace {

const char* kind_name(PatternElement::Kind kind) {
  switch (kind) {
    case PatternElement::Kind::lexical:
      return "lexical";
    case PatternElement::Kind::syntactic:
      return "syntactic";
    case PatternElement::Kind::answer:
      return "answer";
  }
  return "lexical";
}

PatternElement element_from_json(const json& j) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "lexical") return PatternElement::lexical(j.at("token").get<std::string>());
  if (kind == "syntactic") return PatternElement::syntactic(j.at("tag").get<std::string>());
  if (kind == "answer") return PatternElement::answer(j.at("tag").get<std::string>());
  throw DataError("unknown pattern element kind '" + kind + "'");
}

}  // namespace

std::string KnowledgeBase::to_json() const {
  json j;
  j["next_id"] = next_id_;
  auto& sigs = j["signatures"] = json::array();
  for (const auto& sig : signature_order_) {
    json entry;
    entry["category"] = sig.category.str();
    entry["structure_key"] = sig.structure_key;
    auto& arr = entry["patterns"] = json::array();
    for (const auto& p : patterns_.at(sig)) {
      json pj;
      pj["id"] = p.id;
      auto& elems = pj["elements"] = json::array();
      for (const auto& e : p.elements) {
        json ej{{"kind", kind_name(e.kind)}};
        ej[e.kind == PatternElement::Kind::lexical ? "token" : "tag"] = e.value;
        elems.push_back(std::move(ej));
      }
      auto& prov = pj["provenance"] = json::array();
      for (const auto& pr : p.provenance) {
        prov.push_back({{"question", pr.question_id}, {"sentence", pr.sentence_ref}});
      }
      arr.push_back(std::move(pj));
    }
    sigs.push_back(std::move(entry));
  }
  auto& pairs = j["qa_pairs"] = json::array();
  for (const auto& [qid, answer] : qa_pairs_) pairs.push_back({{"question", qid}, {"answer", answer}});
  return j.dump(2) + "\n";
}

KnowledgeBase KnowledgeBase::from_json(const std::string& text) {
  KnowledgeBase kb;
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw DataError("knowledge base must be a JSON object");
    for (const auto& entry : j.value("signatures", json::array())) {
      auto category = Category::parse(entry.at("category").get<std::string>());
      if (!category) throw DataError("bad category in knowledge base");
      Signature sig{*category, entry.at("structure_key").get<std::string>()};
      auto [slot, fresh] = kb.patterns_.try_emplace(sig);
      if (fresh) kb.signature_order_.push_back(sig);
      for (const auto& pj : entry.at("patterns")) {
        Pattern p;
        p.id = pj.at("id").get<std::size_t>();
        p.signature = sig;
        for (const auto& ej : pj.at("elements")) p.elements.push_back(element_from_json(ej));
        for (const auto& pr : pj.at("provenance")) {
          p.provenance.push_back({pr.at("question").get<std::string>(), pr.at("sentence").get<std::string>()});
        }
        validate(p);
        kb.next_id_ = std::max(kb.next_id_, p.id + 1);
        slot->second.push_back(std::move(p));
      }
    }
    for (const auto& pair : j.value("qa_pairs", json::array())) {
      kb.record_qa_pair(pair.at("question").get<std::string>(), pair.at("answer").get<std::string>());
    }
    if (auto it = j.find("next_id"); it != j.end()) {
      kb.next_id_ = std::max(kb.next_id_, it->get<std::size_t>());
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed knowledge base: ") + e.what());
  }
  return kb;
}

void KnowledgeBase::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << to_json();
}

KnowledgeBase KnowledgeBase::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

}  // namespace pqa
