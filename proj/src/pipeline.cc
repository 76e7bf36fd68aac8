#include "pqa/pipeline.h"

#include <algorithm>
#include <exception>
#include <utility>

#include <nlohmann/json.hpp>

namespace pqa {

using nlohmann::json;

std::optional<ScenarioConfig> ScenarioConfig::from_id(int id) {
  switch (id) {
    case 1:
      return ScenarioConfig{1, true, false, false};
    case 2:
      return ScenarioConfig{2, false, true, true};
    case 3:
      return ScenarioConfig{3, true, true, false};
    case 4:
      return ScenarioConfig{4, true, true, true};
    default:
      return std::nullopt;
  }
}

std::vector<std::size_t> RevisionSchedule::checkpoints(std::size_t total) const {
  std::vector<std::size_t> out;
  if (interval == 0) return out;
  for (std::size_t c = interval; c < total; c += interval) out.push_back(c);
  return out;
}

std::size_t RevisionReport::rescued_count() const {
  std::size_t n = 0;
  for (const auto& c : checkpoints) n += c.newly_correct.size();
  return n;
}

Engine::Engine(Resources resources, EngineConfig config, KnowledgeBase kb)
    : resources_(std::move(resources)), config_(std::move(config)), kb_(std::move(kb)) {}

const std::vector<RetrievedSentence>& Engine::retrieved(const Question& question) {
  auto it = retrieved_.find(question.id);
  if (it == retrieved_.end()) {
    auto query = question_query(question, resources_.index.stopwords());
    it = retrieved_.emplace(question.id, resources_.index.retrieve(query, config_.top_k)).first;
  }
  return it->second;
}

const Category& Engine::category(const Question& question) {
  auto it = categories_.find(question.id);
  if (it == categories_.end()) {
    it = categories_.emplace(question.id, classify(question, resources_.hints)).first;
  }
  return it->second;
}

Signature Engine::signature(const Question& question) {
  return question_signature(question, category(question), config_.learn.structure_depth);
}

std::vector<CandidateAnswer> Engine::pattern_candidates(const Question& question,
                                                        const std::vector<Pattern>& patterns) {
  if (patterns.empty()) return {};
  return unify_all(patterns, retrieved(question), config_.relax);
}

std::optional<std::size_t> select_answer(const std::vector<CandidateAnswer>& candidates,
                                         const std::vector<std::string>& references) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (matches_reference(candidates[i].text, references)) return i;
  }
  return std::nullopt;
}

Outcome Engine::answer_question(const Question& question, const ScenarioConfig& scenario) {
  Outcome outcome;
  outcome.question_id = question.id;
  try {
    outcome.category = category(question);
    const auto& sentences = retrieved(question);
    outcome.retrieved = sentences.size();

    if (scenario.use_patterns) {
      auto patterns = kb_.lookup(signature(question));
      outcome.applicable_patterns = patterns.size();
      outcome.candidates = pattern_candidates(question, patterns);
    }
    if (scenario.use_ner) {
      auto ner = extract_ner(outcome.category, sentences, resources_.gazetteer, resources_.regexes,
                             config_.ner);
      for (auto& c : ner) {
        bool dup = std::any_of(outcome.candidates.begin(), outcome.candidates.end(), [&](const CandidateAnswer& x) {
          return x.sentence == c.sentence && x.begin == c.begin && x.end == c.end;
        });
        if (!dup) outcome.candidates.push_back(std::move(c));
      }
    }

    auto chosen = select_answer(outcome.candidates, question.answers);
    if (!chosen && !outcome.candidates.empty()) chosen = 0;
    if (chosen) {
      const auto& c = outcome.candidates[*chosen];
      outcome.final_answer = c.text;
      outcome.final_strategy = c.strategy;
      outcome.relaxation_used = c.strategy == Strategy::pattern ? c.relaxation : Relaxation::none;
      outcome.correct = matches_reference(c.text, question.answers);
    }
  } catch (const std::exception& e) {
    outcome.error = e.what();
    outcome.candidates.clear();
    outcome.final_answer.reset();
    outcome.final_strategy.reset();
    outcome.correct = false;
  }

  if (outcome.correct) {
    outcome.patterns_learned = apply_feedback(question, *outcome.final_answer);
  } else if (scenario.reference_fallback && !outcome.error) {
    outcome.fallback_used = true;
    outcome.patterns_learned = apply_feedback(question, question.answers.front());
  }
  return outcome;
}

std::size_t Engine::apply_feedback(const Question& question, const std::string& answer) {
  auto patterns = learn_patterns(question, category(question), answer, retrieved(question), config_.learn);
  std::size_t added = kb_.insert(patterns);
  kb_.record_qa_pair(question.id, answer);
  return added;
}

CheckpointReport Engine::revise(const std::vector<Question>& questions, std::size_t checkpoint,
                                std::vector<bool>& solved) {
  CheckpointReport report;
  report.checkpoint = checkpoint;
  std::size_t limit = std::min({checkpoint, questions.size(), solved.size()});
  for (std::size_t k = 0; k < limit; ++k) {
    if (solved[k]) continue;
    const Question& q = questions[k];
    report.retried.push_back(q.id);
    auto patterns = kb_.lookup_excluding(signature(q), q.id);
    auto candidates = pattern_candidates(q, patterns);
    auto chosen = select_answer(candidates, q.answers);
    if (!chosen) continue;
    solved[k] = true;
    report.newly_correct.push_back(q.id);
    if (config_.learn_on_revision) report.patterns_learned += apply_feedback(q, candidates[*chosen].text);
  }
  return report;
}

RunResult Engine::run_sequence(const std::vector<Question>& questions, const ScenarioConfig& scenario,
                               std::optional<RevisionSchedule> schedule) {
  RunResult result;
  std::vector<std::size_t> checkpoints;
  if (schedule && scenario.use_patterns) {
    checkpoints = schedule->checkpoints(questions.size());
    result.revision = RevisionReport{schedule->interval, config_.learn_on_revision, {}};
  } else if (schedule) {
    result.revision = RevisionReport{schedule->interval, config_.learn_on_revision, {}};
  }

  std::vector<bool> solved;
  std::vector<Rescue> rescues;
  std::map<std::string, std::size_t> position;
  auto next_checkpoint = checkpoints.begin();
  for (std::size_t k = 0; k < questions.size(); ++k) {
    position[questions[k].id] = k;
    result.outcomes.push_back(answer_question(questions[k], scenario));
    solved.push_back(result.outcomes.back().correct);
    if (next_checkpoint != checkpoints.end() && *next_checkpoint == k + 1) {
      auto report = revise(questions, k + 1, solved);
      for (const auto& id : report.newly_correct) rescues.push_back({position[id], k + 1});
      result.revision->checkpoints.push_back(std::move(report));
      ++next_checkpoint;
    }
  }

  result.points = running_metrics(result.outcomes, AnsweredConvention::exclude_fallback);
  result.points_system_answered = running_metrics(result.outcomes, AnsweredConvention::system_answer);
  if (result.revision) {
    result.revised_forward = running_metrics(result.outcomes, rescues, AnsweredConvention::exclude_fallback,
                                             RescueAccounting::forward);
    result.revised_retroactive = running_metrics(result.outcomes, rescues, AnsweredConvention::exclude_fallback,
                                                 RescueAccounting::retroactive);
  }
  return result;
}

namespace {

json candidate_json(const CandidateAnswer& c) {
  json j;
  j["text"] = c.text;
  j["sentence"] = c.sentence;
  j["span"] = {c.begin, c.end};
  j["strategy"] = to_string(c.strategy);
  j["pattern_id"] = c.pattern_id ? json(*c.pattern_id) : json();
  j["relaxation"] = to_string(c.relaxation);
  return j;
}

}  // namespace

std::string outcome_to_json(const Outcome& o) {
  json j;
  j["question_id"] = o.question_id;
  j["category"] = o.category.str();
  auto& cands = j["candidates"] = json::array();
  for (const auto& c : o.candidates) cands.push_back(candidate_json(c));
  j["final"] = o.final_answer ? json(*o.final_answer) : json();
  j["final_strategy"] = o.final_strategy ? json(to_string(*o.final_strategy)) : json();
  j["correct"] = o.correct;
  j["fallback_used"] = o.fallback_used;
  j["relaxation_used"] = to_string(o.relaxation_used);
  j["applicable_patterns"] = o.applicable_patterns;
  j["patterns_learned"] = o.patterns_learned;
  j["retrieved"] = o.retrieved;
  j["error"] = o.error ? json(*o.error) : json();
  return j.dump();
}

std::string outcome_log(const std::vector<Outcome>& outcomes) {
  std::string out;
  for (const auto& o : outcomes) {
    out += outcome_to_json(o);
    out.push_back('\n');
  }
  return out;
}

std::string revision_report_json(const RevisionReport& report) {
  json j;
  j["interval"] = report.interval;
  j["learn_on_revision"] = report.learn_on_revision;
  j["rescued"] = report.rescued_count();
  auto& arr = j["checkpoints"] = json::array();
  for (const auto& c : report.checkpoints) {
    arr.push_back({{"checkpoint", c.checkpoint},
                   {"retried", c.retried},
                   {"newly_correct", c.newly_correct},
                   {"patterns_learned", c.patterns_learned}});
  }
  return j.dump(2) + "\n";
}

}  // namespace pqa
