#include <gtest/gtest.h>

#include "pqa/extraction.h"
#include "test_support.h"

namespace pqa {
namespace {

std::vector<RetrievedSentence> one(const char* parse) {
  auto t = parse_bracketed(parse);
  return {{"d", 0, 1.0, {join(leaves(t)), t}}};
}

std::vector<std::string> texts(const std::vector<CandidateAnswer>& cands) {
  std::vector<std::string> out;
  for (const auto& c : cands) out.push_back(c.text);
  return out;
}

Gazetteer world() {
  Gazetteer g;
  g.add({"LOC", "country"}, "Brazil");
  g.add({"LOC", "country"}, "France");
  g.add({"HUM", "ind"}, "Dante");
  g.add({"LOC", "city"}, "Paris");
  return g;
}

TEST(Extraction, DateRegex) {
  auto cands = extract_ner({"NUM", "date"},
                           one("(S (NP (NNP Columbus)) (VP (VBD arrived) (PP (IN in) (NP (CD 1492)))) (. .))"), world());
  EXPECT_EQ(texts(cands), std::vector<std::string>{"1492"});
  EXPECT_EQ(cands[0].strategy, Strategy::ner);
  auto full = extract_ner({"NUM", "date"},
                          one("(S (NP (PRP He)) (VP (VBD died) (PP (IN on) (NP (NNP July) (CD 4) (, ,) (CD 1826)))) (. .))"),
                          world());
  EXPECT_EQ(texts(full), std::vector<std::string>{"July 4 , 1826"});
}

TEST(Extraction, OtherNumericClasses) {
  auto s = one("(S (NP (PRP It)) (VP (VBD cost) (NP ($ $) (CD 5) (CD million)) (PP (IN over) (NP (CD 3) (NNS years)))) (. .))");
  EXPECT_EQ(texts(extract_ner({"NUM", "money"}, s, world())), std::vector<std::string>{"$ 5 million"});
  EXPECT_EQ(texts(extract_ner({"NUM", "period"}, s, world())), std::vector<std::string>{"3 years"});
}

TEST(Extraction, FranceBrazilRejectedForPerson) {
  // The question was typed as a person, and the gazetteer knows Brazil as a
  // country, so the person extractor cannot produce the right answer.
  auto s = one("(S (NP (NNP France)) (VP (VBD beat) (NP (NNP Brazil)) (PP (IN in) (NP (DT the) (NN final)))) (. .))");
  EXPECT_TRUE(extract_ner({"HUM", "ind"}, s, world()).empty());
  EXPECT_EQ(texts(extract_ner({"LOC", "country"}, s, world())), (std::vector<std::string>{"France", "Brazil"}));
}

TEST(Extraction, CapitalizedRuns) {
  auto s = one("(S (NP (DT The) (NNP Divine) (NNP Comedy)) (VP (VBD was) (VP (VBN written) (PP (IN by) (NP (NNP Dante) (NNP Alighieri))))) (. .))");
  EXPECT_EQ(texts(extract_ner({"HUM", "ind"}, s, world())), (std::vector<std::string>{"Divine Comedy", "Dante", "Dante Alighieri"}));
}

TEST(Extraction, DescriptionHasNoStrategy) {
  auto s = one("(S (NP (NNP Malcolm) (NNP X)) (VP (VBD died) (PP (IN of) (NP (NN gunshot) (NNS wounds)))) (. .))");
  EXPECT_TRUE(extract_ner({"DESC", "manner"}, s, world()).empty());
}

TEST(Extraction, Abbreviations) {
  auto s = one("(S (NP (DT The) (NNP World) (NNP Health) (NNP Organization) (-LRB- -LRB-) (NNP WHO) (-RRB- -RRB-)) (VP (VBZ is) (ADJP (JJ global))) (. .))");
  EXPECT_EQ(texts(extract_ner({"ABBR", "abb"}, s, world())), std::vector<std::string>{"WHO"});
}

TEST(Extraction, GazetteerForms) {
  auto g = world();
  EXPECT_EQ(g.size(), 4u);
  ASSERT_NE(g.forms({"LOC", "country"}), nullptr);
  EXPECT_EQ(g.forms({"LOC", "country"})->count("brazil"), 1u);
  EXPECT_EQ(g.coarse_classes("brazil"), std::set<std::string>{"LOC"});
  EXPECT_EQ(g.forms({"ENTY", "animal"}), nullptr);
  auto loaded = Gazetteer::load(test::fixture("gazetteer.tsv"));
  EXPECT_GT(loaded.size(), 10u);
}

TEST(Extraction, RoutingCoversEveryCoarseClass) {
  auto routing = ner_routing();
  EXPECT_EQ(routing.size(), 6u);
  EXPECT_FALSE(RegexTable::builtin().for_category({"NUM", "date"}).empty());
  EXPECT_FALSE(RegexTable::builtin().for_category({"NUM", "weight"}).empty());
}

}  // namespace
}  // namespace pqa
