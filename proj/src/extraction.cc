#include "pqa/extraction.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "pqa/error.h"

namespace pqa {

namespace {

constexpr const char* kMonths =
    "(January|February|March|April|May|June|July|August|September|October|November|December)";

constexpr std::pair<const char*, const char*> kBuiltinRegexes[] = {
    {"NUM:date", "(1[0-9]{3}|20[0-9]{2})"},
    {"NUM:date", "MONTH( [0-9]{1,2})?( ,)?( (1[0-9]{3}|20[0-9]{2}))?"},
    {"NUM:date", "[0-9]{1,2} MONTH( (1[0-9]{3}|20[0-9]{2}))?"},
    {"NUM:count", "[0-9]+(,[0-9]{3})*( (hundred|thousand|million|billion))?"},
    {"NUM:money", "\\$ ?[0-9]+(,[0-9]{3})*(\\.[0-9]+)?( (million|billion))?"},
    {"NUM:money", "[0-9]+(,[0-9]{3})*(\\.[0-9]+)? (dollars|euros|pounds)"},
    {"NUM:period", "[0-9]+ (years|months|weeks|days|hours|minutes|seconds)"},
    {"NUM:perc", "[0-9]+(\\.[0-9]+)? ?(%|percent)"},
};

std::string expand(const std::string& pattern) {
  std::string out = pattern;
  for (auto pos = out.find("MONTH"); pos != std::string::npos; pos = out.find("MONTH")) {
    out.replace(pos, 5, kMonths);
  }
  return out;
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

std::string span_text(const std::vector<std::string>& tokens, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    if (i > b) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

// Leftmost-longest scan with a span predicate.
std::vector<Span> scan(const std::vector<std::string>& tokens, std::size_t max_span,
                       const std::function<bool(std::size_t, std::size_t)>& accept) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::optional<std::size_t> best;
    for (std::size_t e = std::min(tokens.size(), i + max_span); e > i; --e) {
      if (accept(i, e)) {
        best = e;
        break;
      }
    }
    if (best) {
      out.push_back({i, *best});
      i = *best;
    } else {
      ++i;
    }
  }
  return out;
}

bool capitalized(const std::string& token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token[0]));
}

bool all_upper(const std::string& token) {
  if (token.size() < 2) return false;
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
}

std::vector<Span> capitalized_runs(const std::vector<std::string>& tokens, const StopwordSet& stopwords) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!capitalized(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t e = i;
    while (e < tokens.size() && capitalized(tokens[e])) ++e;
    std::size_t b = i;
    if (b == 0 && stopwords.contains(to_lower(tokens[0]))) ++b;
    if (b < e) out.push_back({b, e});
    i = e;
  }
  return out;
}

std::vector<Span> parenthesized_upper(const std::vector<std::string>& tokens) {
  std::vector<Span> out;
  auto open = [](const std::string& t) { return t == "(" || t == "-LRB-"; };
  auto close = [](const std::string& t) { return t == ")" || t == "-RRB-"; };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!open(tokens[i])) continue;
    std::size_t e = i + 1;
    while (e < tokens.size() && all_upper(tokens[e])) ++e;
    if (e > i + 1 && e < tokens.size() && close(tokens[e])) {
      out.push_back({i + 1, e});
      i = e;
    }
  }
  return out;
}

}  // namespace

Gazetteer Gazetteer::load(const std::string& path) {
  Gazetteer g;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(path)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(path + ": expected category<TAB>form", line_no);
    auto category = Category::parse(line.substr(0, tab));
    if (!category) throw DataError(path + ": bad category '" + line.substr(0, tab) + "'", line_no);
    g.add(*category, line.substr(tab + 1));
  }
  return g;
}

void Gazetteer::add(const Category& category, const std::string& surface) {
  auto form = normalize_answer(surface);
  if (form.empty()) return;
  entries_[category.str()].insert(form);
  coarse_of_[form].insert(category.coarse);
}

const std::set<std::string>* Gazetteer::forms(const Category& category) const {
  auto it = entries_.find(category.str());
  return it == entries_.end() ? nullptr : &it->second;
}

std::set<std::string> Gazetteer::coarse_classes(const std::string& normalized) const {
  auto it = coarse_of_.find(normalized);
  return it == coarse_of_.end() ? std::set<std::string>{} : it->second;
}

std::size_t Gazetteer::size() const {
  std::size_t n = 0;
  for (const auto& [k, v] : entries_) n += v.size();
  return n;
}

const RegexTable& RegexTable::builtin() {
  static const RegexTable table = [] {
    RegexTable t;
    for (const auto& [category, pattern] : kBuiltinRegexes) t.add(category, pattern);
    return t;
  }();
  return table;
}

RegexTable RegexTable::load(const std::string& path) {
  RegexTable t;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(path)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(path + ": expected category<TAB>pattern", line_no);
    try {
      t.add(line.substr(0, tab), line.substr(tab + 1));
    } catch (const std::regex_error& e) {
      throw DataError(path + ": bad expression: " + e.what(), line_no);
    }
  }
  return t;
}

void RegexTable::add(const std::string& category, const std::string& pattern) {
  if (!Category::parse(category)) throw DataError("bad regex category '" + category + "'");
  entries_.push_back({category, pattern, std::regex(expand(pattern), std::regex::ECMAScript)});
}

std::vector<const RegexTable::Entry*> RegexTable::for_category(const Category& category) const {
  std::vector<const Entry*> out;
  const auto key = category.str();
  for (const auto& e : entries_) {
    if (e.category == key) out.push_back(&e);
  }
  if (!out.empty()) return out;
  const auto prefix = category.coarse + ":";
  for (const auto& e : entries_) {
    if (e.category.starts_with(prefix)) out.push_back(&e);
  }
  return out;
}

std::vector<CandidateAnswer> extract_ner(const Category& category,
                                         const std::vector<RetrievedSentence>& sentences,
                                         const Gazetteer& gazetteer, const RegexTable& regexes,
                                         const NerOptions& options) {
  std::vector<CandidateAnswer> out;
  const std::string& coarse = category.coarse;
  if (coarse == "DESC") return out;

  auto regex_list = regexes.for_category(category);
  const std::set<std::string>* forms = gazetteer.forms(category);

  for (std::size_t s = 0; s < sentences.size(); ++s) {
    auto tokens = leaves(sentences[s].sentence.parse);
    std::vector<Span> spans;

    if (coarse == "NUM") {
      auto hits = scan(tokens, options.max_span, [&](std::size_t b, std::size_t e) {
        auto text = span_text(tokens, b, e);
        return std::any_of(regex_list.begin(), regex_list.end(),
                           [&](const RegexTable::Entry* r) { return std::regex_match(text, r->expression); });
      });
      spans.insert(spans.end(), hits.begin(), hits.end());
    } else if (coarse == "ABBR") {
      auto hits = parenthesized_upper(tokens);
      spans.insert(spans.end(), hits.begin(), hits.end());
    } else {
      if (forms != nullptr) {
        auto hits = scan(tokens, options.max_span, [&](std::size_t b, std::size_t e) {
          return forms->count(normalize_answer(span_text(tokens, b, e))) > 0;
        });
        spans.insert(spans.end(), hits.begin(), hits.end());
      }
      for (const auto& run : capitalized_runs(tokens, *options.stopwords)) {
        auto classes = gazetteer.coarse_classes(normalize_answer(span_text(tokens, run.begin, run.end)));
        if (!classes.empty() && classes.count(coarse) == 0) continue;
        spans.push_back(run);
      }
    }

    std::vector<CandidateAnswer> here;
    for (const auto& span : spans) {
      bool dup = std::any_of(here.begin(), here.end(), [&](const CandidateAnswer& c) {
        return c.begin == span.begin && c.end == span.end;
      });
      if (dup) continue;
      CandidateAnswer c;
      c.text = span_text(tokens, span.begin, span.end);
      c.begin = span.begin;
      c.end = span.end;
      c.strategy = Strategy::ner;
      c.sentence = s;
      here.push_back(std::move(c));
    }
    std::stable_sort(here.begin(), here.end(), [](const CandidateAnswer& a, const CandidateAnswer& b) {
      if (a.begin != b.begin) return a.begin < b.begin;
      return a.end < b.end;
    });
    out.insert(out.end(), std::make_move_iterator(here.begin()), std::make_move_iterator(here.end()));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> ner_routing() {
  return {
      {"NUM", "regex table for the fine class (all NUM expressions when none)"},
      {"HUM", "gazetteer for the fine class + capitalized runs"},
      {"LOC", "gazetteer for the fine class + capitalized runs"},
      {"ENTY", "gazetteer for the fine class + capitalized runs"},
      {"DESC", "none"},
      {"ABBR", "parenthesized uppercase tokens"},
  };
}

}  // namespace pqa
