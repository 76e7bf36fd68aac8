#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace pqa {

// Two-level answer type: a coarse class from the closed six-way set and an
// opaque fine label.
struct Category {
  std::string coarse;
  std::string fine;

  std::string str() const { return coarse + ":" + fine; }

  // "HUM:ind" -> {HUM, ind}. nullopt unless the coarse part is one of
  // ABBR, DESC, ENTY, HUM, LOC, NUM and the fine part is non-empty.
  static std::optional<Category> parse(std::string_view text);

  friend auto operator<=>(const Category&, const Category&) = default;
};

bool is_coarse_class(std::string_view coarse);

}  // namespace pqa
