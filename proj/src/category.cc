#include "pqa/category.h"

#include <array>

namespace pqa {

bool is_coarse_class(std::string_view coarse) {
  static constexpr std::array<std::string_view, 6> kCoarse = {"ABBR", "DESC", "ENTY",
                                                                "HUM",  "LOC",  "NUM"};
  for (auto c : kCoarse) {
    if (c == coarse) return true;
  }
  return false;
}

std::optional<Category> Category::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto coarse = text.substr(0, colon);
  auto fine = text.substr(colon + 1);
  if (!is_coarse_class(coarse) || fine.empty()) return std::nullopt;
  return Category{std::string(coarse), std::string(fine)};
}

}  // namespace pqa
