#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pqa/category.h"
#include "pqa/unification.h"

namespace pqa {

// Result of answering one question.
struct Outcome {
  std::string question_id;
  Category category;
  std::vector<CandidateAnswer> candidates;
  // The matching candidate when correct; otherwise the first candidate, if
  // any (the system's wrong answer).
  std::optional<std::string> final_answer;
  std::optional<Strategy> final_strategy;
  bool correct = false;
  bool fallback_used = false;  // implies !correct
  Relaxation relaxation_used = Relaxation::none;
  std::size_t applicable_patterns = 0;
  std::size_t patterns_learned = 0;
  std::size_t retrieved = 0;
  std::optional<std::string> error;

  bool system_answered() const { return final_answer.has_value(); }
};

}  // namespace pqa
