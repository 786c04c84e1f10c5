#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "nqueens/bench.hpp"
#include "nqueens/errors.hpp"

using namespace nqueens;
using namespace nqueens::bench;

namespace {

TrialRecord rec(int n, Strategy m, int trial, double s, SolutionCount c = 0) {
  return {n, m, trial, s, c};
}

BenchConfig small_config() {
  BenchConfig c;
  c.min_n = 8;
  c.max_n = 8;
  c.modes = {Strategy::Sequential};
  c.trial_schedule = {{8, 3}};
  c.warmup_runs = 1;
  c.workers = 2;
  return c;
}

}  // namespace

TEST(TrialSchedule, DefaultMatchesProtocol) {
  const auto s = default_trial_schedule();
  for (int n = 8; n <= 15; ++n) EXPECT_EQ(s.at(n), 20) << n;
  EXPECT_EQ(s.at(16), 10);
  EXPECT_EQ(s.at(17), 10);
  EXPECT_EQ(s.at(18), 3);
  EXPECT_EQ(s.size(), 11u);
}

TEST(TrialSchedule, ParsesFile) {
  std::istringstream in("# n trials\n8 5\n\n  9 2\n10 1\r\n");
  const auto s = parse_trial_schedule(in);
  EXPECT_EQ(s, (TrialSchedule{{8, 5}, {9, 2}, {10, 1}}));
}

TEST(TrialSchedule, RejectsMalformedLines) {
  for (const char* bad : {"8\n", "8 x\n", "8 0\n", "-1 3\n", "8 2 extra\n", "8 2\n8 3\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(parse_trial_schedule(in), ValidationError) << bad;
  }
}

TEST(BenchConfig, Validation) {
  auto c = small_config();
  EXPECT_NO_THROW(c.validate());
  c.min_n = 9;
  EXPECT_THROW(c.validate(), ValidationError);  // min > max
  c = small_config();
  c.max_n = 9;
  EXPECT_THROW(c.validate(), ValidationError);  // no trials for 9
  c = small_config();
  c.modes.clear();
  EXPECT_THROW(c.validate(), ValidationError);
  c = small_config();
  c.modes = {Strategy::Para, Strategy::Para};
  EXPECT_THROW(c.validate(), ValidationError);
  c = small_config();
  c.workers = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = small_config();
  c.warmup_runs = -1;
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(RunBench, RecordsScheduledTrials) {
  const auto records = run_bench(small_config());
  ASSERT_EQ(records.size(), 3u);
  for (int t = 0; t < 3; ++t) {
    EXPECT_EQ(records[t].n, 8);
    EXPECT_EQ(records[t].mode, Strategy::Sequential);
    EXPECT_EQ(records[t].trial, t);
    EXPECT_EQ(records[t].count, 92u);
    EXPECT_GT(records[t].seconds, 0.0);
  }
}

TEST(RunBench, WarmupRunsAreNotRecorded) {
  auto c = small_config();
  c.warmup_runs = 4;
  c.modes = {Strategy::Sequential, Strategy::Pool};
  int calls = 0;
  const auto records = run_bench(c, [&](BoardSize, ExecutionMode) -> SolutionCount {
    ++calls;
    return 92;
  });
  EXPECT_EQ(records.size(), 6u);
  EXPECT_EQ(calls, 2 * (4 + 3));
}

TEST(RunBench, AllModesAgreeAcrossSizes) {
  BenchConfig c;
  c.min_n = 4;
  c.max_n = 7;
  c.trial_schedule = {{4, 2}, {5, 2}, {6, 2}, {7, 2}};
  c.workers = 3;
  const auto records = run_bench(c);
  EXPECT_EQ(records.size(), 4u * 3u * 2u);
  const std::map<int, SolutionCount> expected = {{4, 2}, {5, 10}, {6, 4}, {7, 40}};
  for (const auto& r : records) EXPECT_EQ(r.count, expected.at(r.n));
}

TEST(RunBench, CountMismatchIsIntegrityError) {
  int calls = 0;
  auto flaky = [&](BoardSize, ExecutionMode) -> SolutionCount {
    return ++calls == 3 ? 91 : 92;
  };
  EXPECT_THROW(run_bench(small_config(), flaky), IntegrityError);

  // Disagreement between modes for the same n is also rejected.
  auto c = small_config();
  c.modes = {Strategy::Sequential, Strategy::Para};
  auto by_mode = [](BoardSize, ExecutionMode m) -> SolutionCount {
    return m.strategy == Strategy::Para ? 1 : 92;
  };
  EXPECT_THROW(run_bench(c, by_mode), IntegrityError);
}

TEST(RunBench, ProgressCallbackSeesEveryRecord) {
  int seen = 0;
  run_bench(small_config(), [&](const TrialRecord&) { ++seen; });
  EXPECT_EQ(seen, 3);
}

TEST(Summarize, MeanAndUnbiasedVariance) {
  const std::vector<TrialRecord> flat = {rec(8, Strategy::Sequential, 0, 1.0),
                                         rec(8, Strategy::Sequential, 1, 1.0),
                                         rec(8, Strategy::Sequential, 2, 1.0)};
  auto s = summarize(flat);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s[0].mean_seconds, 1.0);
  EXPECT_DOUBLE_EQ(s[0].variance_seconds, 0.0);
  EXPECT_EQ(s[0].trials, 3);

  const std::vector<TrialRecord> ramp = {rec(8, Strategy::Sequential, 0, 1.0),
                                         rec(8, Strategy::Sequential, 1, 2.0),
                                         rec(8, Strategy::Sequential, 2, 3.0)};
  s = summarize(ramp);
  EXPECT_DOUBLE_EQ(s[0].mean_seconds, 2.0);
  EXPECT_DOUBLE_EQ(s[0].variance_seconds, 1.0);
}

TEST(Summarize, GroupsByBoardAndMode) {
  const std::vector<TrialRecord> rs = {rec(8, Strategy::Sequential, 0, 1.0),
                                       rec(8, Strategy::Para, 0, 0.5),
                                       rec(8, Strategy::Sequential, 1, 3.0),
                                       rec(9, Strategy::Para, 0, 2.0)};
  const auto s = summarize(rs);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].n, 8);
  EXPECT_EQ(s[0].mode, Strategy::Sequential);
  EXPECT_DOUBLE_EQ(s[0].mean_seconds, 2.0);
  EXPECT_EQ(s[1].mode, Strategy::Para);
  EXPECT_EQ(s[2].n, 9);
  EXPECT_DOUBLE_EQ(s[2].variance_seconds, 0.0);  // single trial
  EXPECT_TRUE(summarize(std::vector<TrialRecord>{}).empty());
}

// Against a two-pass textbook computation on random samples.
TEST(Summarize, MatchesDirectFormulaProperty) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> secs(1e-4, 10.0);
  for (int iter = 0; iter < 100; ++iter) {
    const int k = std::uniform_int_distribution<int>(2, 25)(rng);
    std::vector<TrialRecord> rs;
    std::vector<double> xs;
    for (int t = 0; t < k; ++t) {
      xs.push_back(secs(rng));
      rs.push_back(rec(10, Strategy::Pool, t, xs.back()));
    }
    long double sum = 0, sumsq = 0;
    for (double x : xs) {
      sum += x;
      sumsq += static_cast<long double>(x) * x;
    }
    const double mean = static_cast<double>(sum / k);
    const double var = static_cast<double>((sumsq - sum * sum / k) / (k - 1));
    const auto s = summarize(rs);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_NEAR(s[0].mean_seconds, mean, 1e-12 * std::max(1.0, mean));
    EXPECT_NEAR(s[0].variance_seconds, var, 1e-9 * std::max(1.0, var));
    EXPECT_GE(s[0].variance_seconds, 0.0);
  }
}

TEST(GrowthFactors, RatiosAndGaps) {
  std::vector<BenchSummary> s = {{8, Strategy::Sequential, 1, 1.0, 0},
                                 {9, Strategy::Sequential, 1, 5.0, 0},
                                 {10, Strategy::Sequential, 1, 30.0, 0},
                                 {12, Strategy::Sequential, 1, 900.0, 0},
                                 {9, Strategy::Para, 1, 99.0, 0}};
  const auto g = growth_factors(s, Strategy::Sequential);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].n, 8);
  EXPECT_DOUBLE_EQ(g[0].ratio, 5.0);
  EXPECT_EQ(g[1].n, 9);
  EXPECT_DOUBLE_EQ(g[1].ratio, 6.0);
  EXPECT_TRUE(growth_factors(s, Strategy::Pool).empty());
}

TEST(GrowthFactors, ConstantMeansGiveUnitRatios) {
  std::vector<BenchSummary> s;
  for (int n = 4; n <= 9; ++n) s.push_back({n, Strategy::Para, 3, 0.25, 0});
  for (const auto& g : growth_factors(s, Strategy::Para)) EXPECT_DOUBLE_EQ(g.ratio, 1.0);
}

TEST(GrowthFactors, TableReferenceMagnitude) {
  // Compiled sequential row, n = 16 -> 17.
  std::vector<BenchSummary> s = {{16, Strategy::Sequential, 10, 75.5948, 0},
                                 {17, Strategy::Sequential, 10, 546.312, 0}};
  const auto g = growth_factors(s, Strategy::Sequential);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_NEAR(g[0].ratio, 7.23, 0.005);
}

TEST(BenchIo, RecordsCsvHeaderAndRoundTrip) {
  const std::vector<TrialRecord> rs = {rec(8, Strategy::Sequential, 0, 0.000123456789, 92),
                                       rec(8, Strategy::Pool, 1, 1.5, 92)};
  std::stringstream out;
  write_records_csv(out, rs);
  std::string header;
  std::getline(out, header);
  EXPECT_EQ(header, "n,mode,trial,seconds,count");
  out.seekg(0);
  const auto back = read_records_csv(out);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].mode, Strategy::Pool);
  EXPECT_EQ(back[1].count, 92u);
  EXPECT_DOUBLE_EQ(back[0].seconds, 0.000123456789);
}

TEST(BenchIo, SummaryCsvRoundTripAndRecordsAccepted) {
  const std::vector<BenchSummary> ss = {{8, Strategy::Sequential, 20, 0.00009, 1e-12},
                                        {9, Strategy::Para, 20, 1.67399, 0.01}};
  std::stringstream out;
  write_summary_csv(out, ss);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "n,mode,trials,mean_seconds,variance_seconds");
  const auto back = read_summary_csv(out);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].n, 9);
  EXPECT_EQ(back[1].trials, 20);
  EXPECT_DOUBLE_EQ(back[1].mean_seconds, 1.67399);

  std::stringstream records("n,mode,trial,seconds,count\n8,seq,0,1,92\n8,seq,1,3,92\n");
  const auto summarized = read_summary_csv(records);
  ASSERT_EQ(summarized.size(), 1u);
  EXPECT_DOUBLE_EQ(summarized[0].mean_seconds, 2.0);
  EXPECT_DOUBLE_EQ(summarized[0].variance_seconds, 2.0);

  std::stringstream bad("a,b,c\n");
  EXPECT_THROW(read_summary_csv(bad), ValidationError);
  std::stringstream bad_row("n,mode,trials,mean_seconds,variance_seconds\n8,seq,x,1,0\n");
  EXPECT_THROW(read_summary_csv(bad_row), ValidationError);
}

TEST(BenchIo, JsonEchoesConfig) {
  auto c = small_config();
  std::stringstream out;
  write_summary_json(out, c, std::vector<BenchSummary>{{8, Strategy::Sequential, 3, 0.5, 0.0}});
  const std::string s = out.str();
  EXPECT_NE(s.find("\"config\""), std::string::npos);
  EXPECT_NE(s.find("\"mean_seconds\": 0.5"), std::string::npos);
  EXPECT_NE(s.find("\"variance_seconds\""), std::string::npos);
  EXPECT_NE(s.find("\"8\": 3"), std::string::npos);
}
