#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqa/classify.h"
#include "pqa/corpus.h"
#include "pqa/evaluation.h"
#include "pqa/extraction.h"
#include "pqa/knowledge.h"
#include "pqa/outcome.h"
#include "pqa/retrieval.h"
#include "pqa/unification.h"

namespace pqa {

// 1: NER only. 2: patterns, reference as fallback. 3: NER and patterns.
// 4: NER and patterns, reference as fallback.
struct ScenarioConfig {
  int id = 1;
  bool use_ner = true;
  bool use_patterns = false;
  bool reference_fallback = false;

  static std::optional<ScenarioConfig> from_id(int id);
};

struct EngineConfig {
  std::size_t top_k = 20;
  RelaxConfig relax;
  LearnOptions learn;
  NerOptions ner;
  bool learn_on_revision = true;
};

struct Resources {
  Index index;
  Gazetteer gazetteer;
  RegexTable regexes = RegexTable::builtin();
  HintTable hints = HintTable::builtin();
};

// Checkpoints at interval * n for every n >= 1 with interval * n < total.
struct RevisionSchedule {
  std::size_t interval = 100;

  std::vector<std::size_t> checkpoints(std::size_t total) const;
};

struct CheckpointReport {
  std::size_t checkpoint = 0;
  std::vector<std::string> retried;
  std::vector<std::string> newly_correct;
  std::size_t patterns_learned = 0;
};

struct RevisionReport {
  std::size_t interval = 0;
  bool learn_on_revision = true;
  std::vector<CheckpointReport> checkpoints;

  std::size_t rescued_count() const;
};

struct RunResult {
  std::vector<Outcome> outcomes;
  std::vector<EvalPoint> points;                 // headline: fallback excluded from answered
  std::vector<EvalPoint> points_system_answered; // fallback counted as answered when a system answer existed
  std::optional<RevisionReport> revision;
  std::vector<EvalPoint> revised_forward;
  std::vector<EvalPoint> revised_retroactive;
};

// Question interpretation, sentence retrieval and answer extraction for a
// sequence of questions, with the knowledge base growing between them.
class Engine {
 public:
  Engine(Resources resources, EngineConfig config, KnowledgeBase kb = {});

  // Classify, retrieve, extract; the knowledge base is read-only until the
  // candidates are final, then feedback or fallback learning runs.
  Outcome answer_question(const Question& question, const ScenarioConfig& scenario);

  // Learn from (question, answer) over the question's retrieved sentences
  // and record the pair. Returns the number of new patterns.
  std::size_t apply_feedback(const Question& question, const std::string& answer);

  RunResult run_sequence(const std::vector<Question>& questions, const ScenarioConfig& scenario,
                         std::optional<RevisionSchedule> schedule = std::nullopt);

  // Retry every unsolved question among the first `checkpoint` ones with
  // pattern extraction over its cached sentences, excluding patterns the
  // question itself contributed to. Rescued questions are marked in `solved`.
  CheckpointReport revise(const std::vector<Question>& questions, std::size_t checkpoint,
                          std::vector<bool>& solved);

  // Pattern candidates only, for an explicit pattern set.
  std::vector<CandidateAnswer> pattern_candidates(const Question& question,
                                                  const std::vector<Pattern>& patterns);

  const std::vector<RetrievedSentence>& retrieved(const Question& question);
  const Category& category(const Question& question);
  Signature signature(const Question& question);

  const KnowledgeBase& kb() const { return kb_; }
  KnowledgeBase& kb() { return kb_; }
  const EngineConfig& config() const { return config_; }
  const Resources& resources() const { return resources_; }

 private:
  Resources resources_;
  EngineConfig config_;
  KnowledgeBase kb_;
  std::map<std::string, std::vector<RetrievedSentence>> retrieved_;
  std::map<std::string, Category> categories_;
};

// First candidate matching a reference, if any.
std::optional<std::size_t> select_answer(const std::vector<CandidateAnswer>& candidates,
                                         const std::vector<std::string>& references);

std::string outcome_to_json(const Outcome& outcome);
std::string outcome_log(const std::vector<Outcome>& outcomes);
std::string revision_report_json(const RevisionReport& report);

}  // namespace pqa
