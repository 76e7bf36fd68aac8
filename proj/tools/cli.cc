#include "cli.h"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pqa/error.h"
#include "pqa/pipeline.h"
#include "pqa/text.h"

namespace pqa {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optional resource files shared by run, tutor and ingest. Empty means the
// built-in table (or an empty gazetteer).
struct ResourcePaths {
  std::string gazetteer;
  std::string stopwords;
  std::string hints;
  std::string tag_hierarchy;
  std::string ner_regex;
  std::string irregular;
};

void add_resource_flags(CLI::App& app, ResourcePaths& paths) {
  app.add_option("--gazetteer", paths.gazetteer, "coarse:fine<TAB>surface lines");
  app.add_option("--stopwords", paths.stopwords, "one stopword per line");
  app.add_option("--hints", paths.hints, "head_noun<TAB>coarse:fine lines");
  app.add_option("--tag-hierarchy", paths.tag_hierarchy, "tag<TAB>superclass lines");
  app.add_option("--ner-regex", paths.ner_regex, "coarse:fine<TAB>regex lines");
  app.add_option("--irregular", paths.irregular, "form<TAB>lemma lines");
}

// Owns everything the engine's options point into.
struct LoadedResources {
  StopwordSet stopwords = StopwordSet::english();
  IrregularForms irregular = IrregularForms::builtin();
  Gazetteer gazetteer;
  RegexTable regexes = RegexTable::builtin();
  HintTable hints = HintTable::builtin();
  TagHierarchy hierarchy = TagHierarchy::builtin();

  explicit LoadedResources(const ResourcePaths& p) {
    if (!p.stopwords.empty()) stopwords = StopwordSet::load(p.stopwords);
    if (!p.irregular.empty()) irregular = IrregularForms::load(p.irregular);
    if (!p.gazetteer.empty()) gazetteer = Gazetteer::load(p.gazetteer);
    if (!p.ner_regex.empty()) regexes = RegexTable::load(p.ner_regex);
    if (!p.hints.empty()) hints = HintTable::load(p.hints);
    if (!p.tag_hierarchy.empty()) hierarchy = TagHierarchy::load(p.tag_hierarchy);
  }
};

struct RunSettings {
  int scenario = 0;
  std::string corpus;
  std::string docs;
  std::size_t revise_interval = 0;  // 0: no revision
  bool learn_on_revision = true;
  std::string kb_in;
  std::string kb_out;
  std::size_t top_k = 20;
  std::string relax_measure = "levenshtein";
  std::optional<double> relax_threshold;
  bool lexical_relax = true;
  bool syntactic_relax = true;
  ResourcePaths resources;
  std::string out;
};

std::string absolute_or_empty(const std::string& path) {
  if (path.empty()) return path;
  return fs::absolute(path).lexically_normal().string();
}

json resources_json(const ResourcePaths& p) {
  return {{"gazetteer", p.gazetteer},     {"stopwords", p.stopwords}, {"hints", p.hints},
          {"tag_hierarchy", p.tag_hierarchy}, {"ner_regex", p.ner_regex}, {"irregular", p.irregular}};
}

json settings_json(const RunSettings& s) {
  json j;
  j["scenario"] = s.scenario;
  j["corpus"] = absolute_or_empty(s.corpus);
  j["docs"] = absolute_or_empty(s.docs);
  j["revise_interval"] = s.revise_interval;
  j["learn_on_revision"] = s.learn_on_revision;
  j["kb_in"] = absolute_or_empty(s.kb_in);
  j["top_k"] = s.top_k;
  j["relax_measure"] = s.relax_measure;
  j["relax_threshold"] = s.relax_threshold ? json(*s.relax_threshold) : json();
  j["lexical_relax"] = s.lexical_relax;
  j["syntactic_relax"] = s.syntactic_relax;
  ResourcePaths abs = s.resources;
  for (auto* p : {&abs.gazetteer, &abs.stopwords, &abs.hints, &abs.tag_hierarchy, &abs.ner_regex, &abs.irregular}) {
    *p = absolute_or_empty(*p);
  }
  j["resources"] = resources_json(abs);
  return j;
}

RunSettings settings_from_json(const json& j) {
  RunSettings s;
  s.scenario = j.at("scenario").get<int>();
  s.corpus = j.at("corpus").get<std::string>();
  s.docs = j.at("docs").get<std::string>();
  s.revise_interval = j.at("revise_interval").get<std::size_t>();
  s.learn_on_revision = j.at("learn_on_revision").get<bool>();
  s.kb_in = j.at("kb_in").get<std::string>();
  s.top_k = j.at("top_k").get<std::size_t>();
  s.relax_measure = j.at("relax_measure").get<std::string>();
  if (!j.at("relax_threshold").is_null()) s.relax_threshold = j.at("relax_threshold").get<double>();
  s.lexical_relax = j.at("lexical_relax").get<bool>();
  s.syntactic_relax = j.at("syntactic_relax").get<bool>();
  const json& r = j.at("resources");
  s.resources.gazetteer = r.at("gazetteer").get<std::string>();
  s.resources.stopwords = r.at("stopwords").get<std::string>();
  s.resources.hints = r.at("hints").get<std::string>();
  s.resources.tag_hierarchy = r.at("tag_hierarchy").get<std::string>();
  s.resources.ner_regex = r.at("ner_regex").get<std::string>();
  s.resources.irregular = r.at("irregular").get<std::string>();
  return s;
}

RelaxConfig relax_config(const RunSettings& s, const TagHierarchy& hierarchy) {
  auto measure = parse_measure(s.relax_measure);
  if (!measure) throw UsageError("unknown --relax-measure '" + s.relax_measure + "'");
  RelaxConfig config;
  config.lexical_measure = *measure;
  config.lexical_threshold = s.relax_threshold.value_or(default_threshold(*measure));
  if (config.lexical_threshold < 0.0 || config.lexical_threshold > 1.0) {
    throw UsageError("--relax-threshold must lie in [0, 1]");
  }
  config.enable_lexical = s.lexical_relax;
  config.enable_syntactic = s.syntactic_relax;
  config.hierarchy = hierarchy;
  return config;
}

std::string timestamp_dir() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  localtime_r(&now, &tm);
  std::ostringstream os;
  os << "out/" << std::put_time(&tm, "%Y%m%d-%H%M%S");
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write " + path.string());
  file << content;
  if (!file) throw DataError("cannot write " + path.string());
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot open " + path);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

std::string format_point(const EvalPoint& p) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << "P=" << p.precision << " R=" << p.recall << " F=" << p.f;
  return os.str();
}

json engine_metadata(const EngineConfig& config, const LoadedResources& res) {
  json j;
  j["bm25"] = {{"k1", Bm25Params{}.k1}, {"b", Bm25Params{}.b}};
  j["top_k"] = config.top_k;
  j["structure_depth"] = config.learn.structure_depth;
  j["max_pattern_length"] = config.learn.max_length;
  j["ner_max_span"] = config.ner.max_span;
  j["relaxation"] = {{"lexical", config.relax.enable_lexical},
                     {"measure", to_string(config.relax.lexical_measure)},
                     {"threshold", config.relax.lexical_threshold},
                     {"syntactic", config.relax.enable_syntactic},
                     {"relaxed_pass", "only when the exact pass finds nothing for the question"}};
  j["tie_breaks"] = {
      {"retrieval", "score descending, then (doc_id, position) ascending"},
      {"candidates", "pattern candidates by (sentence, begin, end), then NER candidates by (sentence, begin, end)"},
      {"selection", "first candidate matching a reference; otherwise the first candidate"},
      {"fallback_reference", "first reference answer"},
  };
  j["answered_convention"] = {{"headline", "fallback questions excluded from answered"},
                              {"alternate", "any system answer counted as answered"}};
  json routing = json::object();
  for (const auto& [coarse, rule] : ner_routing()) routing[coarse] = rule;
  j["ner_routing"] = routing;
  j["resource_sizes"] = {{"stopwords", res.stopwords.size()},
                         {"irregular_forms", res.irregular.entries().size()},
                         {"gazetteer", res.gazetteer.size()},
                         {"ner_regex", res.regexes.entries().size()},
                         {"hints", res.hints.entries().size()},
                         {"tag_hierarchy", res.hierarchy.entries().size()}};
  return j;
}

int cmd_run(RunSettings s, std::ostream& out) {
  auto scenario = ScenarioConfig::from_id(s.scenario);
  if (!scenario) throw UsageError("--scenario must be 1, 2, 3 or 4");
  if (s.corpus.empty() || s.docs.empty()) throw UsageError("--corpus and --docs are required");
  if (s.top_k == 0) throw UsageError("--top-k must be positive");

  LoadedResources res(s.resources);
  EngineConfig config;
  config.top_k = s.top_k;
  config.relax = relax_config(s, res.hierarchy);
  config.learn.stopwords = &res.stopwords;
  config.learn.irregular = &res.irregular;
  config.ner.stopwords = &res.stopwords;
  config.learn_on_revision = s.learn_on_revision;

  auto questions = load_qa_corpus(s.corpus);
  auto documents = load_documents(s.docs);
  KnowledgeBase kb = s.kb_in.empty() ? KnowledgeBase{} : KnowledgeBase::load(s.kb_in);

  Resources resources{Index::build(documents, {}, res.stopwords), res.gazetteer, res.regexes, res.hints};
  Engine engine(std::move(resources), config, std::move(kb));
  std::optional<RevisionSchedule> schedule;
  if (s.revise_interval > 0) schedule = RevisionSchedule{s.revise_interval};
  RunResult result = engine.run_sequence(questions, *scenario, schedule);

  fs::path dir = s.out.empty() ? fs::path(timestamp_dir()) : fs::path(s.out);
  fs::create_directories(dir);
  std::string n = std::to_string(s.scenario);
  std::vector<std::string> outputs = {"outcomes.jsonl", "scenario" + n + "_metrics.csv",
                                      "scenario" + n + "_metrics_alt.csv", "run_metadata.json"};
  write_file(dir / outputs[0], outcome_log(result.outcomes));
  write_file(dir / outputs[1], series_csv(result.points));
  write_file(dir / outputs[2], series_csv(result.points_system_answered));
  if (result.revision) {
    std::string i = std::to_string(s.revise_interval);
    outputs.push_back("revision_i" + i + ".csv");
    outputs.push_back("revision_i" + i + "_retroactive.csv");
    outputs.push_back("revision_i" + i + "_report.json");
    write_file(dir / outputs[4], series_csv(result.revised_forward));
    write_file(dir / outputs[5], series_csv(result.revised_retroactive));
    write_file(dir / outputs[6], revision_report_json(*result.revision));
  }
  if (!s.kb_out.empty()) engine.kb().save(s.kb_out);

  json meta;
  meta["config"] = settings_json(s);
  meta["engine"] = engine_metadata(config, res);
  meta["questions"] = questions.size();
  meta["documents"] = documents.size();
  meta["sentences"] = engine.resources().index.sentence_count();
  meta["outputs"] = outputs;
  meta["kb_patterns"] = engine.kb().pattern_count();
  if (!result.points.empty()) {
    const auto& last = result.points.back();
    meta["final"] = {{"precision", last.precision}, {"recall", last.recall}, {"f", last.f},
                     {"correct", last.correct}, {"answered", last.answered}};
  }
  if (result.revision) meta["rescued"] = result.revision->rescued_count();
  write_file(dir / outputs[3], meta.dump(2) + "\n");

  out << "scenario " << s.scenario << ": " << questions.size() << " questions";
  if (!result.points.empty()) {
    const auto& last = result.points.back();
    out << ", correct " << last.correct << ", answered " << last.answered << ", " << format_point(last);
  }
  out << "\n";
  if (result.revision && !result.revised_forward.empty()) {
    out << "revision every " << s.revise_interval << ": rescued " << result.revision->rescued_count() << ", "
        << format_point(result.revised_forward.back()) << "\n";
  }
  out << "output: " << dir.string() << "\n";
  return kExitOk;
}

int cmd_ingest(const std::string& corpus, const std::string& docs, const ResourcePaths& paths,
               std::ostream& out) {
  if (corpus.empty() && docs.empty()) throw UsageError("ingest needs --corpus and/or --docs");
  LoadedResources res(paths);
  if (!corpus.empty()) {
    auto questions = load_qa_corpus(corpus);
    std::size_t gold = 0;
    std::map<std::string, std::size_t> by_category;
    for (const auto& q : questions) {
      if (q.category) ++gold;
      ++by_category[classify(q, res.hints).str()];
    }
    out << "questions: " << questions.size() << "\n";
    out << "gold categories: " << gold << "\n";
    for (const auto& [cat, count] : by_category) out << "  " << cat << ": " << count << "\n";
  }
  if (!docs.empty()) {
    auto documents = load_documents(docs);
    std::size_t sentences = 0;
    for (const auto& d : documents) sentences += d.sentences.size();
    out << "documents: " << documents.size() << "\n";
    out << "sentences: " << sentences << "\n";
  }
  if (!paths.gazetteer.empty()) out << "gazetteer entries: " << res.gazetteer.size() << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& kb_path, const std::string& outcomes_path, std::ostream& out) {
  if (kb_path.empty()) throw UsageError("--kb-in is required");
  KnowledgeBase kb = KnowledgeBase::load(kb_path);
  out << "signatures: " << kb.signatures().size() << "\n";
  out << "patterns: " << kb.pattern_count() << "\n";
  out << "qa_pairs: " << kb.qa_pairs().size() << "\n";
  for (const auto& sig : kb.signatures()) {
    out << "  " << sig.category.str() << "\t" << sig.structure_key << "\t" << kb.lookup(sig).size() << "\n";
  }
  if (outcomes_path.empty()) return kExitOk;

  std::size_t total = 0, correct = 0, exact = 0, relaxed = 0, ner = 0, fallback = 0, learned = 0;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(outcomes_path)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(outcomes_path + ": " + e.what(), line_no);
    }
    ++total;
    if (j.value("fallback_used", false)) ++fallback;
    learned += j.value("patterns_learned", std::size_t{0});
    if (!j.value("correct", false)) continue;
    ++correct;
    if (j.at("final_strategy") == "pattern") {
      (j.at("relaxation_used") == "none" ? exact : relaxed) += 1;
    } else {
      ++ner;
    }
  }
  out << "outcomes: " << total << "\n";
  out << "correct: " << correct << "\n";
  out << "pattern_correct: " << exact + relaxed << "\n";
  out << "  exact: " << exact << "\n";
  out << "  relaxed: " << relaxed << "\n";
  out << "ner_correct: " << ner << "\n";
  out << "fallback: " << fallback << "\n";
  out << "patterns_learned: " << learned << "\n";
  return kExitOk;
}

struct TutorSettings {
  std::string docs;
  std::string kb_in;
  std::string kb_out;
  bool with_ner = false;
  std::size_t top_k = 20;
  ResourcePaths resources;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class TutorSession {
 public:
  TutorSession(Engine& engine, bool with_ner, std::ostream& out)
      : engine_(engine), with_ner_(with_ner), out_(out) {}

  // False on quit.
  bool handle(const std::string& raw) {
    std::string line = trim(raw);
    if (line.empty()) return true;
    if (line == "quit") return false;
    if (line.front() == '(') {
      ask(line);
    } else if (line.rfind("file ", 0) == 0) {
      std::string text;
      try {
        text = read_file(trim(line.substr(5)));
      } catch (const DataError& e) {
        out_ << "error: " << e.what() << "\n";
        return true;
      }
      ask(text);
    } else if (line == "y") {
      confirm();
    } else if (line == "n") {
      reject();
    } else if (line.rfind("answer ", 0) == 0) {
      teach(trim(line.substr(7)));
    } else {
      out_ << "error: expected a bracketed question, file <path>, y, n, answer <text> or quit\n";
    }
    return true;
  }

 private:
  void ask(const std::string& text) {
    ParseTree parse;
    try {
      parse = parse_bracketed(text);
    } catch (const FormatError& e) {
      out_ << "error: " << e.what() << "\n";
      return;
    }
    Question q{"tutor-" + std::to_string(++asked_), join(leaves(parse)), std::move(parse), std::nullopt, {}};
    const Category& cat = engine_.category(q);
    auto patterns = engine_.kb().lookup(engine_.signature(q));
    auto candidates = engine_.pattern_candidates(q, patterns);
    if (with_ner_) {
      const auto& res = engine_.resources();
      for (auto& c : extract_ner(cat, engine_.retrieved(q), res.gazetteer, res.regexes, engine_.config().ner)) {
        candidates.push_back(std::move(c));
      }
    }
    out_ << "question: " << q.text << "\n";
    out_ << "category: " << cat.str() << "\n";
    out_ << "patterns: " << patterns.size() << "\n";
    for (const auto& c : candidates) {
      out_ << "  candidate: " << c.text << " (" << to_string(c.strategy);
      if (c.pattern_id) out_ << " #" << *c.pattern_id;
      if (c.relaxation != Relaxation::none) out_ << ", " << to_string(c.relaxation);
      out_ << ")\n";
    }
    if (candidates.empty()) {
      out_ << "answer: none\n";
      answer_.reset();
    } else {
      out_ << "answer: " << candidates.front().text << "\n";
      answer_ = candidates.front().text;
    }
    pending_ = std::move(q);
  }

  void confirm() {
    if (!pending_ || !answer_) {
      out_ << "error: no answer to confirm\n";
      return;
    }
    learned(engine_.apply_feedback(*pending_, *answer_));
  }

  void reject() {
    if (!pending_) {
      out_ << "error: no question pending\n";
      return;
    }
    answer_.reset();
    out_ << "marked wrong; supply the answer with: answer <text>\n";
  }

  void teach(const std::string& answer) {
    if (!pending_) {
      out_ << "error: no question pending\n";
      return;
    }
    if (answer.empty()) {
      out_ << "error: empty answer\n";
      return;
    }
    learned(engine_.apply_feedback(*pending_, answer));
  }

  void learned(std::size_t n) {
    out_ << "learned " << n << " pattern" << (n == 1 ? "" : "s") << " (" << engine_.kb().pattern_count()
         << " in knowledge base)\n";
    pending_.reset();
    answer_.reset();
  }

  Engine& engine_;
  bool with_ner_;
  std::ostream& out_;
  std::size_t asked_ = 0;
  std::optional<Question> pending_;
  std::optional<std::string> answer_;
};

int cmd_tutor(const TutorSettings& s, std::istream& in, std::ostream& out) {
  if (s.docs.empty()) throw UsageError("--docs is required");
  if (s.top_k == 0) throw UsageError("--top-k must be positive");
  LoadedResources res(s.resources);
  EngineConfig config;
  config.top_k = s.top_k;
  config.relax.hierarchy = res.hierarchy;
  config.learn.stopwords = &res.stopwords;
  config.learn.irregular = &res.irregular;
  config.ner.stopwords = &res.stopwords;
  KnowledgeBase kb = s.kb_in.empty() ? KnowledgeBase{} : KnowledgeBase::load(s.kb_in);
  Resources resources{Index::build(load_documents(s.docs), {}, res.stopwords), res.gazetteer, res.regexes,
                      res.hints};
  Engine engine(std::move(resources), config, std::move(kb));

  TutorSession session(engine, s.with_ner, out);
  std::string line;
  while (true) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      break;
    }
    if (!session.handle(line)) break;
  }
  if (!s.kb_out.empty()) {
    engine.kb().save(s.kb_out);
    out << "saved " << engine.kb().pattern_count() << " patterns to " << s.kb_out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Question answering with patterns learned from feedback", "pqa"};
  app.require_subcommand(1);

  std::string ingest_corpus, ingest_docs;
  ResourcePaths ingest_resources;
  auto* ingest = app.add_subcommand("ingest", "Validate a question corpus and/or document collection");
  ingest->add_option("--corpus", ingest_corpus, "question corpus (JSON Lines)");
  ingest->add_option("--docs", ingest_docs, "documents (JSON Lines)");
  add_resource_flags(*ingest, ingest_resources);

  RunSettings run_settings;
  std::string from_metadata;
  auto* run = app.add_subcommand("run", "Answer a question sequence under one scenario");
  run->add_option("--scenario", run_settings.scenario, "1 NER, 2 patterns+fallback, 3 both, 4 both+fallback");
  run->add_option("--corpus", run_settings.corpus, "question corpus (JSON Lines)");
  run->add_option("--docs", run_settings.docs, "documents (JSON Lines)");
  run->add_option("--revise-interval", run_settings.revise_interval, "revise unsolved questions every i questions");
  run->add_flag("!--no-revision-learning", run_settings.learn_on_revision,
                "do not learn from questions rescued by revision");
  run->add_option("--kb-in", run_settings.kb_in, "initial knowledge base");
  run->add_option("--kb-out", run_settings.kb_out, "write the final knowledge base here");
  run->add_option("--top-k", run_settings.top_k, "sentences retrieved per question")->capture_default_str();
  run->add_option("--relax-measure", run_settings.relax_measure, "levenshtein, overlap or jaccard")
      ->capture_default_str();
  run->add_option("--relax-threshold", run_settings.relax_threshold, "lexical similarity threshold");
  run->add_flag("!--no-lexical-relax", run_settings.lexical_relax, "disable lexical relaxation");
  run->add_flag("!--no-syntactic-relax", run_settings.syntactic_relax, "disable syntactic relaxation");
  run->add_option("--out", run_settings.out, "output directory (default out/<timestamp>)");
  run->add_option("--from-metadata", from_metadata, "repeat the run described by a run_metadata.json");
  add_resource_flags(*run, run_settings.resources);

  TutorSettings tutor_settings;
  auto* tutor = app.add_subcommand("tutor", "Interactive session that learns from your answers");
  tutor->add_option("--docs", tutor_settings.docs, "documents (JSON Lines)");
  tutor->add_option("--kb-in", tutor_settings.kb_in, "initial knowledge base");
  tutor->add_option("--kb-out", tutor_settings.kb_out, "knowledge base written on quit");
  tutor->add_option("--top-k", tutor_settings.top_k, "sentences retrieved per question")->capture_default_str();
  tutor->add_flag("--with-ner", tutor_settings.with_ner, "add NER candidates to pattern candidates");
  add_resource_flags(*tutor, tutor_settings.resources);

  std::string stats_kb, stats_outcomes;
  auto* stats = app.add_subcommand("stats", "Summarize a knowledge base and optionally an outcome log");
  stats->add_option("--kb-in", stats_kb, "knowledge base");
  stats->add_option("--outcomes", stats_outcomes, "outcome log (JSON Lines)");

  std::vector<std::string> argv_store;
  argv_store.push_back("pqa");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return cmd_ingest(ingest_corpus, ingest_docs, ingest_resources, out);
    if (*run) {
      if (!from_metadata.empty()) {
        json meta;
        try {
          meta = json::parse(read_file(from_metadata));
          std::string out_dir = run_settings.out;
          std::string kb_out = run_settings.kb_out;
          run_settings = settings_from_json(meta.at("config"));
          run_settings.out = out_dir;
          run_settings.kb_out = kb_out;
        } catch (const json::exception& e) {
          throw DataError(from_metadata + ": " + e.what());
        }
      }
      return cmd_run(run_settings, out);
    }
    if (*tutor) return cmd_tutor(tutor_settings, in, out);
    if (*stats) return cmd_stats(stats_kb, stats_outcomes, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace pqa
