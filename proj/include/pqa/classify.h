#pragma once

#include <map>
#include <string>

#include "pqa/category.h"
#include "pqa/corpus.h"

namespace pqa {

// Head noun -> category hints consulted for what/which questions.
class HintTable {
 public:
  HintTable() = default;

  static const HintTable& builtin();
  // "head_noun<TAB>coarse:fine" lines; '#' starts a comment line.
  static HintTable load(const std::string& path);

  void add(std::string head_noun, Category category);
  const Category* find(const std::string& head_noun) const;
  const std::map<std::string, Category>& entries() const { return entries_; }

 private:
  std::map<std::string, Category> entries_;
};

// Gold label when present. Otherwise ordered wh-word rules:
//   who/whom/whose -> HUM:ind, where -> LOC:other, when -> NUM:date,
//   why -> DESC:reason, how many/much -> NUM:count, how + JJ/RB -> NUM:other,
//   other how -> DESC:manner, what/which -> first hinted NN/NNS head noun,
//   anything else -> ENTY:other.
Category classify(const Question& question, const HintTable& hints = HintTable::builtin());

// Rules only; gold label ignored.
Category classify_by_rules(const ParseTree& parse, const HintTable& hints = HintTable::builtin());

}  // namespace pqa
