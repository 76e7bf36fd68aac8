#include "pqa/evaluation.h"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "pqa/error.h"
#include "pqa/text.h"

namespace pqa {

double f_measure(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

namespace {

EvalPoint point(std::size_t i, std::size_t correct, std::size_t answered) {
  EvalPoint p;
  p.i = i;
  p.correct = correct;
  p.answered = answered;
  p.precision_defined = answered > 0;
  p.precision = answered > 0 ? static_cast<double>(correct) / static_cast<double>(answered) : 1.0;
  p.recall = static_cast<double>(correct) / static_cast<double>(i);
  p.f = f_measure(p.precision, p.recall);
  return p;
}

bool counts_as_answered(const Outcome& o, AnsweredConvention convention) {
  if (!o.system_answered()) return false;
  return convention == AnsweredConvention::system_answer || !o.fallback_used;
}

}  // namespace

std::vector<EvalPoint> running_metrics(const std::vector<Outcome>& outcomes,
                                       AnsweredConvention convention) {
  return running_metrics(outcomes, {}, convention, RescueAccounting::forward);
}

std::vector<EvalPoint> running_metrics(const std::vector<Outcome>& outcomes,
                                       const std::vector<Rescue>& rescues,
                                       AnsweredConvention convention, RescueAccounting accounting) {
  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
  // First 1-based point at which each question counts as rescued.
  std::vector<std::size_t> rescued_from(outcomes.size(), kNever);
  for (const auto& r : rescues) {
    if (r.question_index >= outcomes.size()) continue;
    std::size_t from = accounting == RescueAccounting::forward ? r.checkpoint : r.question_index + 1;
    rescued_from[r.question_index] = std::min(rescued_from[r.question_index], from);
  }

  std::vector<EvalPoint> points;
  points.reserve(outcomes.size());
  for (std::size_t i = 1; i <= outcomes.size(); ++i) {
    std::size_t correct = 0;
    std::size_t answered = 0;
    for (std::size_t k = 0; k < i; ++k) {
      const Outcome& o = outcomes[k];
      if (o.correct || rescued_from[k] <= i) {
        ++correct;
        ++answered;
      } else if (counts_as_answered(o, convention)) {
        ++answered;
      }
    }
    points.push_back(point(i, correct, answered));
  }
  return points;
}

std::string series_csv(const std::vector<EvalPoint>& points) {
  std::ostringstream out;
  out << "i,P,R,F,correct,answered\n";
  char buf[128];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%zu,%.4f,%.4f,%.4f,%zu,%zu\n", p.i, p.precision, p.recall, p.f,
                  p.correct, p.answered);
    out << buf;
  }
  return out.str();
}

void export_series(const std::vector<EvalPoint>& points, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << series_csv(points);
  if (!out) throw DataError("write failed for " + path);
}

std::vector<EvalPoint> read_series(const std::string& path) {
  auto lines = split_lines(path);
  if (lines.empty() || lines[0] != "i,P,R,F,correct,answered") throw DataError(path + ": bad header", 1);
  std::vector<EvalPoint> points;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    EvalPoint p;
    unsigned long long i = 0;
    unsigned long long correct = 0;
    unsigned long long answered = 0;
    if (std::sscanf(lines[n].c_str(), "%llu,%lf,%lf,%lf,%llu,%llu", &i, &p.precision, &p.recall, &p.f,
                    &correct, &answered) != 6) {
      throw DataError(path + ": malformed row", n + 1);
    }
    p.i = i;
    p.correct = correct;
    p.answered = answered;
    p.precision_defined = answered > 0;
    points.push_back(p);
  }
  return points;
}

}  // namespace pqa
