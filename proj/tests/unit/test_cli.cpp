#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace pisotlab;
using namespace pisotlab::cli;

namespace {

const Family FS = Family::FullySubtractive;
const Family BR = Family::Brun;

EnumerateReport enumerate(Family f, int d, int len, bool oracle = false, int threads = 1) {
  EnumerateOptions opt;
  opt.family = f;
  opt.dim = d;
  opt.max_len = len;
  opt.oracle = oracle;
  opt.threads = threads;
  return run_enumerate(opt);
}

}  // namespace

TEST(Enumerate, Examples) {
  const EnumerateReport fs = enumerate(FS, 3, 3);
  EXPECT_EQ(fs.summary.words_checked, 39u);
  EXPECT_EQ(fs.summary.mismatches, 0u);
  EXPECT_EQ(exit_code(fs), kOk);

  const EnumerateReport br = enumerate(BR, 3, 1);
  ASSERT_EQ(br.records.size(), 3u);
  for (const auto& r : br.records) {
    const bool three = r.word == "BR:3:3";
    EXPECT_EQ(r.primitive, three);
    EXPECT_EQ(r.pisot, three);
    EXPECT_EQ(r.lambda2_seminorm_bound.has_value(), three);
    EXPECT_FALSE(r.dobrushin_bound.has_value());
  }
  EXPECT_THROW(enumerate(FS, 3, 0), std::invalid_argument);
}

TEST(Enumerate, ResourceCap) {
  EnumerateOptions opt;
  opt.max_len = 13;
  EXPECT_THROW(run_enumerate(opt), ResourceCapExceeded);
  opt.max_len = 3;
  opt.cap = 38;
  EXPECT_THROW(run_enumerate(opt), ResourceCapExceeded);
  opt.cap = 39;
  EXPECT_NO_THROW(run_enumerate(opt));
}

TEST(Enumerate, OracleAgrees) {
  const EnumerateReport r = enumerate(BR, 3, 5, true);
  EXPECT_EQ(r.summary.oracle_disagreements, 0u);
  std::size_t decided = 0;
  for (const auto& w : r.records) decided += w.oracle_agrees.has_value();
  EXPECT_GT(decided, r.records.size() / 2);
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  EXPECT_EQ(to_json(enumerate(FS, 3, 5, false, 1)), to_json(enumerate(FS, 3, 5, false, 4)));
}

TEST(Json, EnumerateRoundTrip) {
  const EnumerateReport r = enumerate(FS, 3, 4, true);
  EXPECT_EQ(enumerate_report_from_json(to_json(r)), r);
  EXPECT_EQ(to_json(enumerate_report_from_json(to_json(r))), to_json(r));
}

TEST(Json, CertifyRoundTrip) {
  CertifyOptions opt;
  opt.family = BR;
  opt.grid = 7;
  opt.words = {Word(BR, 3, {1, 3, 2}), Word(BR, 3, {3})};
  const CertifyReport r = run_certify(opt);
  EXPECT_EQ(certify_report_from_json(to_json(r)), r);
  EXPECT_EQ(r.certificates[0].verdict, "strict_contraction");
}

TEST(Json, LyapunovRoundTrip) {
  LyapunovOptions opt;
  opt.steps = 5000;
  opt.trials = 3;
  opt.seed = 17;
  const LyapunovReport r = run_lyapunov(opt);
  EXPECT_EQ(lyapunov_report_from_json(to_json(r)), r);
  opt.periodic = Word(BR, 3, {1, 2, 3});
  opt.method = LyapunovMethod::periodic_exact;
  const LyapunovReport p = run_lyapunov(opt);
  EXPECT_EQ(lyapunov_report_from_json(to_json(p)), p);
  EXPECT_EQ(p.spectrum.size(), 3u);
}

TEST(Json, OrbitAndPisotCheckRoundTrip) {
  OrbitOptions opt;
  opt.start = RatVector{Rational(355, 113), Rational(22, 7), 1};
  opt.steps = 12;
  opt.family = FS;
  const OrbitReport o = run_orbit(opt);
  EXPECT_EQ(orbit_report_from_json(to_json(o)), o);
  const PisotCheckReport p = run_pisot_check(product(Word(FS, 3, {1, 2, 3})));
  EXPECT_EQ(pisot_check_report_from_json(to_json(p)), p);
  EXPECT_THROW(orbit_report_from_json(to_json(p)), std::invalid_argument);
}

TEST(Json, ExactFieldsAreStrings) {
  OrbitOptions opt;
  opt.family = BR;
  opt.start = RatVector{Rational(7, 2), 2, 1};
  opt.steps = 1;
  const std::string json = to_json(run_orbit(opt));
  EXPECT_NE(json.find("\"7/2\""), std::string::npos);
  EXPECT_NE(json.find("\"schema_version\": 1"), std::string::npos);
}

TEST(Rounding, TwelveDigits) {
  EXPECT_EQ(round12(1.0 / 3), 0.333333333333);
  const Interval i{0.1234567890123456, 0.1234567890129};
  const Interval r = round12_outward(i);
  EXPECT_LE(r.lo, i.lo);
  EXPECT_GE(r.hi, i.hi);
  EXPECT_EQ(round12(r.lo), r.lo);
  EXPECT_EQ(round12(r.hi), r.hi);
  EXPECT_LT(r.width(), 1e-11);
}

TEST(Certify, Examples) {
  for (auto [f, d, n] : {std::tuple{FS, 3, 12}, std::tuple{BR, 3, 12}, std::tuple{FS, 4, 8}}) {
    CertifyOptions opt;
    opt.family = f;
    opt.dim = d;
    opt.grid = n;
    const CertifyReport r = run_certify(opt);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_EQ(exit_code(r), kOk);
    for (const auto& c : r.certificates) EXPECT_EQ(c.verdict, "certified_le_one");
  }
  CertifyOptions bad;
  bad.grid = 2;
  EXPECT_THROW(run_certify(bad), std::invalid_argument);
}

TEST(LyapunovCommand, ExitCodes) {
  LyapunovOptions opt;
  opt.family = FS;
  opt.weights = RatVector{1, 0, 0};
  opt.steps = 20000;
  opt.trials = 4;
  EXPECT_NE(exit_code(run_lyapunov(opt)), kOk);

  LyapunovOptions brun;
  brun.steps = 50000;
  brun.trials = 6;
  brun.seed = 4;
  EXPECT_EQ(exit_code(run_lyapunov(brun)), kOk);

  LyapunovOptions periodic;
  periodic.periodic = Word(BR, 3, {1, 2, 3});
  periodic.steps = 30000;
  const LyapunovReport p = run_lyapunov(periodic);
  EXPECT_NEAR(p.gamma1, 0.3892, 1e-3);
  EXPECT_NEAR(p.gamma2, -0.1310, 1e-3);
  EXPECT_EQ(exit_code(p), kOk);

  LyapunovOptions misuse;
  misuse.method = LyapunovMethod::periodic_exact;
  EXPECT_THROW(run_lyapunov(misuse), std::invalid_argument);
}

TEST(LyapunovCommand, WeightsAreNormalized) {
  LyapunovOptions opt;
  opt.weights = RatVector{2, 2, 2};
  opt.steps = 2000;
  opt.trials = 2;
  const LyapunovReport r = run_lyapunov(opt);
  EXPECT_EQ(r.weights, (RatVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
}

TEST(OrbitCommand, Examples) {
  OrbitOptions opt;
  opt.start = RatVector{7, 5, 3};
  opt.steps = 5;
  const OrbitReport r = run_orbit(opt);
  ASSERT_FALSE(r.steps.empty());
  EXPECT_EQ(r.steps[0].letter, 3);
  opt.family = FS;
  opt.start = RatVector{4, 5, 6};
  opt.steps = 1;
  EXPECT_EQ(run_orbit(opt).terminated, "left_image_domains");
  opt.steps = 0;
  EXPECT_TRUE(run_orbit(opt).steps.empty());
}

TEST(PisotCheckCommand, ExitCodes) {
  EXPECT_EQ(exit_code(run_pisot_check(product(Word(FS, 3, {1, 2, 3})))), kOk);
  EXPECT_EQ(exit_code(run_pisot_check(product(Word(BR, 3, {1, 2})))), kMismatch);
}

TEST(Threads, EnvironmentFallback) {
  EXPECT_EQ(resolve_threads(3), 3);
  ::setenv("PISOTLAB_THREADS", "5", 1);
  EXPECT_EQ(resolve_threads(0), 5);
  ::unsetenv("PISOTLAB_THREADS");
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(Render, FormatsDiffer) {
  const PisotCheckReport p = run_pisot_check(product(Word(FS, 3, {1, 2, 3})));
  EXPECT_EQ(render(p, Format::csv).rfind("char_poly,", 0), 0u);
  EXPECT_EQ(render(p, Format::json).front(), '{');
  EXPECT_NE(render(p, Format::table).find("x^3 - 7x^2 + 5x - 1"), std::string::npos);
}
