#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pqa/outcome.h"

namespace pqa {

struct EvalPoint {
  std::size_t i = 0;  // 1-based question index
  double precision = 1.0;
  double recall = 0.0;
  double f = 0.0;
  std::size_t correct = 0;
  std::size_t answered = 0;
  bool precision_defined = false;  // false while answered == 0 (precision pinned to 1)

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

// What counts toward the precision denominator.
enum class AnsweredConvention {
  // A system answer that was not replaced by the reference fallback.
  exclude_fallback,
  // Any system answer, fallback or not.
  system_answer,
};

// When a question rescued at a revision checkpoint starts counting.
enum class RescueAccounting {
  forward,      // from the checkpoint on
  retroactive,  // from the question's own index
};

struct Rescue {
  std::size_t question_index;  // 0-based position in the sequence
  std::size_t checkpoint;      // rescued after this many questions
};

double f_measure(double precision, double recall);

std::vector<EvalPoint> running_metrics(const std::vector<Outcome>& outcomes,
                                       AnsweredConvention convention = AnsweredConvention::exclude_fallback);

std::vector<EvalPoint> running_metrics(const std::vector<Outcome>& outcomes,
                                       const std::vector<Rescue>& rescues,
                                       AnsweredConvention convention, RescueAccounting accounting);

// CSV "i,P,R,F,correct,answered", reals with 4 decimals. Throws DataError
// when the file cannot be written.
void export_series(const std::vector<EvalPoint>& points, const std::string& path);
std::string series_csv(const std::vector<EvalPoint>& points);
std::vector<EvalPoint> read_series(const std::string& path);

}  // namespace pqa
