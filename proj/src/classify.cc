#include "pqa/classify.h"

#include <sstream>

#include "pqa/error.h"
#include "pqa/text.h"

namespace pqa {

namespace {

struct Hint {
  const char* noun;
  const char* category;
};

constexpr Hint kBuiltinHints[] = {
    {"abbreviation", "ABBR:abb"}, {"actor", "HUM:ind"},         {"age", "NUM:period"},
    {"animal", "ENTY:animal"},    {"author", "HUM:ind"},        {"band", "HUM:gr"},
    {"capital", "LOC:city"},      {"century", "NUM:date"},      {"city", "LOC:city"},
    {"color", "ENTY:color"},      {"colour", "ENTY:color"},     {"company", "HUM:gr"},
    {"continent", "LOC:other"},   {"cost", "NUM:money"},        {"country", "LOC:country"},
    {"currency", "ENTY:currency"}, {"date", "NUM:date"},        {"day", "NUM:date"},
    {"disease", "ENTY:dismed"},   {"distance", "NUM:dist"},     {"food", "ENTY:food"},
    {"height", "NUM:dist"},       {"instrument", "ENTY:instru"}, {"inventor", "HUM:ind"},
    {"island", "LOC:other"},      {"king", "HUM:ind"},          {"language", "ENTY:lang"},
    {"length", "NUM:dist"},       {"month", "NUM:date"},        {"mountain", "LOC:mount"},
    {"nation", "LOC:country"},    {"number", "NUM:count"},      {"ocean", "LOC:other"},
    {"organization", "HUM:gr"},   {"painter", "HUM:ind"},       {"percentage", "NUM:perc"},
    {"person", "HUM:ind"},        {"place", "LOC:other"},       {"population", "NUM:count"},
    {"president", "HUM:ind"},     {"price", "NUM:money"},       {"queen", "HUM:ind"},
    {"religion", "ENTY:religion"}, {"river", "LOC:other"},      {"speed", "NUM:speed"},
    {"sport", "ENTY:sport"},      {"state", "LOC:state"},       {"team", "HUM:gr"},
    {"temperature", "NUM:temp"},  {"town", "LOC:city"},         {"weight", "NUM:weight"},
    {"writer", "HUM:ind"},        {"year", "NUM:date"},
};

bool is_wh(const std::string& w) {
  return w == "who" || w == "whom" || w == "whose" || w == "what" || w == "which" ||
         w == "when" || w == "where" || w == "why" || w == "how";
}

Category make(const char* coarse, const char* fine) { return Category{coarse, fine}; }

// Leaves as (lowercased token, tag).
std::vector<std::pair<std::string, std::string>> tagged_leaves(const ParseTree& parse) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const ParseTree* node : dfs_nodes(parse)) {
    if (node->is_leaf()) out.emplace_back(to_lower(node->token()), node->label());
  }
  return out;
}

}  // namespace

const HintTable& HintTable::builtin() {
  static const HintTable table = [] {
    HintTable t;
    for (const auto& h : kBuiltinHints) t.add(h.noun, *Category::parse(h.category));
    return t;
  }();
  return table;
}

HintTable HintTable::load(const std::string& path) {
  HintTable t;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(path)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(path + ": expected noun<TAB>category", line_no);
    auto category = Category::parse(line.substr(tab + 1));
    if (!category) throw DataError(path + ": bad category '" + line.substr(tab + 1) + "'", line_no);
    t.add(to_lower(line.substr(0, tab)), *category);
  }
  return t;
}

void HintTable::add(std::string head_noun, Category category) {
  entries_[std::move(head_noun)] = std::move(category);
}

const Category* HintTable::find(const std::string& head_noun) const {
  auto it = entries_.find(head_noun);
  if (it != entries_.end()) return &it->second;
  if (head_noun.size() > 4 && head_noun.ends_with("ies")) {
    it = entries_.find(head_noun.substr(0, head_noun.size() - 3) + "y");
    if (it != entries_.end()) return &it->second;
  }
  if (head_noun.size() > 3 && head_noun.back() == 's') {
    it = entries_.find(head_noun.substr(0, head_noun.size() - 1));
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

Category classify_by_rules(const ParseTree& parse, const HintTable& hints) {
  auto words = tagged_leaves(parse);
  std::size_t wh = 0;
  while (wh < words.size() && !is_wh(words[wh].first)) ++wh;
  if (wh == words.size()) return make("ENTY", "other");

  const std::string& word = words[wh].first;
  if (word == "who" || word == "whom" || word == "whose") return make("HUM", "ind");
  if (word == "where") return make("LOC", "other");
  if (word == "when") return make("NUM", "date");
  if (word == "why") return make("DESC", "reason");
  if (word == "how") {
    if (wh + 1 < words.size()) {
      const auto& [next, tag] = words[wh + 1];
      if (next == "many" || next == "much") return make("NUM", "count");
      if (tag.starts_with("JJ") || tag.starts_with("RB")) return make("NUM", "other");
    }
    return make("DESC", "manner");
  }
  // what / which
  for (std::size_t k = wh + 1; k < words.size(); ++k) {
    const auto& [token, tag] = words[k];
    if (tag != "NN" && tag != "NNS") continue;
    if (const Category* hit = hints.find(token)) return *hit;
  }
  return make("ENTY", "other");
}

Category classify(const Question& question, const HintTable& hints) {
  if (question.category) return *question.category;
  return classify_by_rules(question.parse, hints);
}

}  // namespace pqa
