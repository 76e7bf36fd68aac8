#pragma once

#include <map>
#include <string>
#include <string_view>

namespace pqa {

// Classic Porter (1980) suffix stripper. Expects lowercase ASCII.
std::string porter_stem(std::string_view word);

// Irregular inflections mapped to their base form before stemming, so
// that "wrote" and "written" meet at the same stem.
class IrregularForms {
 public:
  IrregularForms() = default;

  static const IrregularForms& builtin();
  // "form<TAB>lemma" lines.
  static IrregularForms load(const std::string& path);

  void add(std::string form, std::string lemma);
  std::string_view lemma(std::string_view form) const;
  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Lowercase, map irregular forms, then Porter.
std::string stem(std::string_view word, const IrregularForms& irregular = IrregularForms::builtin());

}  // namespace pqa
