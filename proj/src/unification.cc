#include "pqa/unification.h"

#include <algorithm>
#include <utility>

#include "pqa/error.h"
#include "pqa/text.h"

namespace pqa {

namespace {

constexpr std::pair<const char*, const char*> kBuiltinHierarchy[] = {
    {"NN", "NOUN"},  {"NNS", "NOUN"}, {"NNP", "NOUN"}, {"NNPS", "NOUN"}, {"NP", "NOUN"},
    {"VB", "VERB"},  {"VBD", "VERB"}, {"VBG", "VERB"}, {"VBN", "VERB"},  {"VBP", "VERB"},
    {"VBZ", "VERB"}, {"JJ", "ADJ"},   {"JJR", "ADJ"},  {"JJS", "ADJ"},   {"RB", "ADV"},
    {"RBR", "ADV"},  {"RBS", "ADV"},  {"WP", "WH"},    {"WDT", "WH"},    {"WRB", "WH"},
};

int rank(Relaxation r) {
  switch (r) {
    case Relaxation::none:
      return 0;
    case Relaxation::lexical:
    case Relaxation::syntactic:
      return 1;
    case Relaxation::both:
      return 2;
  }
  return 2;
}

Relaxation combine(bool lexical, bool syntactic) {
  if (lexical && syntactic) return Relaxation::both;
  if (lexical) return Relaxation::lexical;
  if (syntactic) return Relaxation::syntactic;
  return Relaxation::none;
}

class Aligner {
 public:
  Aligner(const Pattern& pattern, const ParseTree& tree, const RelaxConfig& config, MatchMode mode)
      : pattern_(pattern), config_(config), mode_(mode), nodes_(spanned_nodes(tree)),
        tokens_(leaves(tree)), by_start_(tokens_.size()), leaf_at_(tokens_.size(), nullptr) {
    for (const auto& n : nodes_) {
      by_start_[n.begin].push_back(&n);
      if (n.node->is_leaf()) leaf_at_[n.begin] = &n;
    }
  }

  std::vector<CandidateAnswer> run() {
    const std::size_t m = pattern_.elements.size();
    const std::size_t n = tokens_.size();
    if (m == 0) return {};
    for (const auto& unit : nodes_) {
      if (n - unit.begin < m) continue;
      Step first = try_unit(pattern_.elements[0], unit);
      if (!first.ok) continue;
      State state;
      state.lexical = first.lexical;
      state.syntactic = first.syntactic;
      if (pattern_.elements[0].kind == PatternElement::Kind::answer) {
        state.answer_begin = unit.begin;
        state.answer_end = unit.end;
      }
      align(1, unit.end, state);
    }

    std::vector<CandidateAnswer> out;
    for (const auto& [span, relaxation] : found_) {
      CandidateAnswer c;
      c.begin = span.first;
      c.end = span.second;
      std::vector<std::string> part(tokens_.begin() + static_cast<std::ptrdiff_t>(c.begin),
                                    tokens_.begin() + static_cast<std::ptrdiff_t>(c.end));
      c.text = join(part);
      c.strategy = Strategy::pattern;
      c.pattern_id = pattern_.id;
      c.relaxation = relaxation;
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  struct State {
    bool lexical = false;
    bool syntactic = false;
    std::size_t answer_begin = 0;
    std::size_t answer_end = 0;
  };

  struct Step {
    bool ok = false;
    bool lexical = false;
    bool syntactic = false;
  };

  Step try_unit(const PatternElement& element, const SpannedNode& unit) const {
    const std::string& label = unit.node->label();
    if (element.kind == PatternElement::Kind::lexical) {
      if (!unit.node->is_leaf()) return {};
      auto token = to_lower(unit.node->token());
      if (token == element.value) return {true, false, false};
      if (mode_.lexical &&
          lexical_similarity(element.value, token, config_.lexical_measure) >= config_.lexical_threshold) {
        return {true, true, false};
      }
      return {};
    }
    if (label == element.value) return {true, false, false};
    if (mode_.syntactic && tag_compatible(element.value, label, config_.hierarchy)) {
      return {true, false, true};
    }
    return {};
  }

  void align(std::size_t j, std::size_t pos, const State& state) {
    const auto& elements = pattern_.elements;
    if (j == elements.size()) {
      record(state);
      return;
    }
    if (elements.size() - j > tokens_.size() - pos) return;
    const PatternElement& element = elements[j];
    if (element.kind == PatternElement::Kind::lexical) {
      const SpannedNode* leaf = leaf_at_[pos];
      Step step = try_unit(element, *leaf);
      if (!step.ok) return;
      State next = state;
      next.lexical |= step.lexical;
      align(j + 1, pos + 1, next);
      return;
    }
    for (const SpannedNode* unit : by_start_[pos]) {
      Step step = try_unit(element, *unit);
      if (!step.ok) continue;
      State next = state;
      next.lexical |= step.lexical;
      next.syntactic |= step.syntactic;
      if (element.kind == PatternElement::Kind::answer) {
        next.answer_begin = unit->begin;
        next.answer_end = unit->end;
      }
      align(j + 1, unit->end, next);
    }
  }

  void record(const State& state) {
    auto relaxation = combine(state.lexical, state.syntactic);
    auto key = std::make_pair(state.answer_begin, state.answer_end);
    auto [it, fresh] = found_.try_emplace(key, relaxation);
    if (!fresh && rank(relaxation) < rank(it->second)) it->second = relaxation;
  }

  const Pattern& pattern_;
  const RelaxConfig& config_;
  MatchMode mode_;
  std::vector<SpannedNode> nodes_;
  std::vector<std::string> tokens_;
  std::vector<std::vector<const SpannedNode*>> by_start_;
  std::vector<const SpannedNode*> leaf_at_;
  std::map<std::pair<std::size_t, std::size_t>, Relaxation> found_;
};

MatchMode relaxed_mode(const RelaxConfig& config) {
  return MatchMode{config.enable_lexical, config.enable_syntactic};
}

// Union over patterns for one sentence; first producer of a span wins,
// except that a less relaxed match replaces a more relaxed one.
void merge_into(std::vector<CandidateAnswer>& all, std::vector<CandidateAnswer> found) {
  for (auto& c : found) {
    auto it = std::find_if(all.begin(), all.end(), [&](const CandidateAnswer& x) {
      return x.sentence == c.sentence && x.begin == c.begin && x.end == c.end;
    });
    if (it == all.end()) {
      all.push_back(std::move(c));
    } else if (rank(c.relaxation) < rank(it->relaxation)) {
      *it = std::move(c);
    }
  }
}

std::vector<CandidateAnswer> pass(const std::vector<Pattern>& patterns,
                                  const std::vector<RetrievedSentence>& sentences,
                                  const RelaxConfig& config, MatchMode mode) {
  std::vector<CandidateAnswer> all;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (const auto& pattern : patterns) {
      auto found = match_pattern(pattern, sentences[s].sentence.parse, config, mode);
      for (auto& c : found) c.sentence = s;
      merge_into(all, std::move(found));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const CandidateAnswer& a, const CandidateAnswer& b) {
    if (a.sentence != b.sentence) return a.sentence < b.sentence;
    if (a.begin != b.begin) return a.begin < b.begin;
    return a.end < b.end;
  });
  return all;
}

}  // namespace

const TagHierarchy& TagHierarchy::builtin() {
  static const TagHierarchy hierarchy = [] {
    TagHierarchy h;
    for (const auto& [tag, cls] : kBuiltinHierarchy) h.add(tag, cls);
    return h;
  }();
  return hierarchy;
}

TagHierarchy TagHierarchy::load(const std::string& path) {
  TagHierarchy h;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(path)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(path + ": expected tag<TAB>superclass", line_no);
    h.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return h;
}

void TagHierarchy::add(std::string tag, std::string superclass) {
  entries_[std::move(tag)] = std::move(superclass);
}

const std::string& TagHierarchy::superclass(const std::string& tag) const {
  auto it = entries_.find(tag);
  return it == entries_.end() ? tag : it->second;
}

bool tag_compatible(const std::string& a, const std::string& b, const TagHierarchy& hierarchy) {
  return a == b || hierarchy.superclass(a) == hierarchy.superclass(b);
}

std::string to_string(Relaxation relaxation) {
  switch (relaxation) {
    case Relaxation::none:
      return "none";
    case Relaxation::lexical:
      return "lexical";
    case Relaxation::syntactic:
      return "syntactic";
    case Relaxation::both:
      return "both";
  }
  return "none";
}

std::string to_string(Strategy strategy) {
  return strategy == Strategy::pattern ? "pattern" : "ner";
}

std::vector<CandidateAnswer> match_pattern(const Pattern& pattern, const ParseTree& tree,
                                           const RelaxConfig& config, MatchMode mode) {
  return Aligner(pattern, tree, config, mode).run();
}

std::vector<CandidateAnswer> unify(const Pattern& pattern, const ParseTree& tree,
                                   const RelaxConfig& config) {
  auto exact = match_pattern(pattern, tree, config, MatchMode{});
  if (!exact.empty() || !config.any()) return exact;
  return match_pattern(pattern, tree, config, relaxed_mode(config));
}

std::vector<CandidateAnswer> unify_all(const std::vector<Pattern>& patterns,
                                       const std::vector<RetrievedSentence>& sentences,
                                       const RelaxConfig& config) {
  auto exact = pass(patterns, sentences, config, MatchMode{});
  if (!exact.empty() || !config.any()) return exact;
  return pass(patterns, sentences, config, relaxed_mode(config));
}

}  // namespace pqa
