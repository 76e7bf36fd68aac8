#include <cstdio>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "pqa/error.h"
#include "pqa/evaluation.h"

namespace pqa {
namespace {

Outcome outcome(bool answered, bool correct, bool fallback = false) {
  Outcome o;
  if (answered || correct) o.final_answer = "x";
  o.correct = correct;
  o.fallback_used = fallback;
  return o;
}

TEST(Evaluation, FMeasure) {
  EXPECT_NEAR(f_measure(0.792, 0.451), 0.5747, 5e-5);
  EXPECT_NEAR(f_measure(0.435, 0.127), 0.1966, 5e-5);
  EXPECT_DOUBLE_EQ(f_measure(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(f_measure(1, 1), 1.0);
}

TEST(Evaluation, AllCorrect) {
  std::vector<Outcome> os(5, outcome(true, true));
  for (const auto& p : running_metrics(os)) {
    EXPECT_DOUBLE_EQ(p.precision, 1.0);
    EXPECT_DOUBLE_EQ(p.recall, 1.0);
    EXPECT_DOUBLE_EQ(p.f, 1.0);
  }
  EXPECT_TRUE(running_metrics({}).empty());
}

TEST(Evaluation, UnansweredPrecisionFlagged) {
  auto ps = running_metrics({outcome(false, false), outcome(true, false)});
  EXPECT_DOUBLE_EQ(ps[0].precision, 1.0);
  EXPECT_FALSE(ps[0].precision_defined);
  EXPECT_DOUBLE_EQ(ps[0].f, 0.0);
  EXPECT_TRUE(ps[1].precision_defined);
  EXPECT_DOUBLE_EQ(ps[1].precision, 0.0);
}

TEST(Evaluation, FallbackConventions) {
  // A wrong system answer replaced by the reference.
  std::vector<Outcome> os = {outcome(true, true), outcome(true, false, true), outcome(false, false, true)};
  auto headline = running_metrics(os, AnsweredConvention::exclude_fallback);
  auto alt = running_metrics(os, AnsweredConvention::system_answer);
  EXPECT_EQ(headline[2].answered, 1u);
  EXPECT_EQ(alt[2].answered, 2u);
  EXPECT_EQ(headline[2].correct, 1u);
  EXPECT_EQ(alt[2].correct, 1u);
}

// Independent recount of every prefix.
TEST(Evaluation, PrefixCountOracle) {
  std::mt19937 rng(17);
  std::vector<Outcome> os;
  for (int i = 0; i < 30; ++i) {
    bool fallback = rng() % 4 == 0;
    bool correct = !fallback && rng() % 2 == 0;
    bool answered = correct || rng() % 2 == 0;
    os.push_back(outcome(answered, correct, fallback));
  }
  auto ps = running_metrics(os);
  ASSERT_EQ(ps.size(), os.size());
  for (std::size_t i = 1; i <= os.size(); ++i) {
    int c = 0, a = 0;
    for (std::size_t k = 0; k < i; ++k) {
      c += os[k].correct;
      a += os[k].final_answer.has_value() && !os[k].fallback_used;
    }
    const auto& p = ps[i - 1];
    EXPECT_EQ(p.i, i);
    EXPECT_EQ(p.correct, static_cast<std::size_t>(c));
    EXPECT_EQ(p.answered, static_cast<std::size_t>(a));
    double P = a ? double(c) / a : 1.0;
    double R = double(c) / i;
    EXPECT_DOUBLE_EQ(p.precision, P);
    EXPECT_DOUBLE_EQ(p.recall, R);
    EXPECT_DOUBLE_EQ(p.f, P + R > 0 ? 2 * P * R / (P + R) : 0.0);
    EXPECT_GE(p.precision, p.recall);
  }
}

TEST(Evaluation, RescueAccounting) {
  std::vector<Outcome> os = {outcome(false, false), outcome(true, true), outcome(false, false), outcome(true, true)};
  std::vector<Rescue> rescues = {{0, 3}};
  auto fwd = running_metrics(os, rescues, AnsweredConvention::exclude_fallback, RescueAccounting::forward);
  auto retro = running_metrics(os, rescues, AnsweredConvention::exclude_fallback, RescueAccounting::retroactive);
  EXPECT_EQ(fwd[1].correct, 1u);
  EXPECT_EQ(fwd[2].correct, 2u);
  EXPECT_EQ(retro[0].correct, 1u);
  EXPECT_EQ(retro[1].correct, 2u);
  EXPECT_EQ(fwd[3], retro[3]);
}

TEST(Evaluation, CsvRoundTrip) {
  std::vector<Outcome> os = {outcome(true, true), outcome(true, false), outcome(false, false)};
  auto ps = running_metrics(os);
  auto csv = series_csv(ps);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "i,P,R,F,correct,answered");
  EXPECT_NE(csv.find("2,0.5000,0.5000,0.5000,1,2"), std::string::npos);
  auto path = std::filesystem::temp_directory_path() / "pqa_series_test.csv";
  export_series(ps, path.string());
  auto back = read_series(path.string());
  ASSERT_EQ(back.size(), ps.size());
  EXPECT_EQ(back[1].correct, 1u);
  EXPECT_NEAR(back[2].recall, 1.0 / 3.0, 1e-4);
  std::filesystem::remove(path);
  EXPECT_THROW(export_series(ps, "/nonexistent-dir/x.csv"), DataError);
}

}  // namespace
}  // namespace pqa
