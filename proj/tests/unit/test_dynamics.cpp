#include "oracles.hpp"
#include "pisotlab/cones.hpp"
#include "pisotlab/dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pisotlab;

namespace {

const Family FS = Family::FullySubtractive;
const Family BR = Family::Brun;

RatVector ints(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// sort(x - y, y, z) in decreasing order
RatVector brun_formula(const RatVector& x) {
  RatVector out{x[0] - x[1], x[1], x[2]};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

RatVector fs_formula(const RatVector& x) {
  const Rational m = *std::min_element(x.begin(), x.end());
  RatVector out = x;
  for (auto& v : out)
    if (v != m) v -= m;
  return out;
}

// (1/p) log of the sorted eigenvalue moduli of product(w), float oracle.
std::vector<double> oracle_exponents(const Word& w) {
  auto moduli = oracle::sorted_moduli(oracle::eigenvalues(oracle::to_mat(product(w))));
  for (double& m : moduli) m = std::log(m) / static_cast<double>(w.size());
  return moduli;
}

}  // namespace

TEST(CfStep, Examples) {
  const CfStep a = cf_step(BR, ints({7, 5, 3}));
  EXPECT_EQ(a.status, Termination::completed);
  EXPECT_EQ(a.letter, 3);
  EXPECT_EQ(a.point, ints({5, 3, 2}));

  const CfStep b = cf_step(BR, ints({7, 5, 1}));
  EXPECT_EQ(b.letter, 2);
  EXPECT_EQ(b.point, ints({5, 2, 1}));

  const CfStep c = cf_step(FS, ints({3, 7, 8}));
  EXPECT_EQ(c.letter, 1);
  EXPECT_EQ(c.point, ints({3, 4, 5}));

  EXPECT_EQ(cf_step(FS, ints({4, 5, 6})).status, Termination::left_image_domains);
}

TEST(CfStep, BoundaryPointsAreRefused) {
  EXPECT_EQ(cf_step(BR, ints({2, 1, 1})).status, Termination::hit_boundary);
  EXPECT_EQ(cf_step(BR, ints({5, 3, 2})).status, Termination::hit_boundary);  // x - y = z
  EXPECT_EQ(cf_step(FS, ints({3, 3, 5})).status, Termination::hit_boundary);  // two minima
  EXPECT_EQ(cf_step(FS, ints({0, 3, 5})).status, Termination::hit_boundary);
  EXPECT_THROW(cf_step(BR, ints({3, 2})), std::invalid_argument);
}

TEST(CfStep, MatchesClosedFormMaps) {
  std::mt19937_64 rng(51);
  int brun_steps = 0, fs_steps = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    RatVector x = oracle::random_positive(3, 40, 7, rng);
    std::sort(x.begin(), x.end(), std::greater<>());
    const CfStep s = cf_step(BR, x);
    if (s.status == Termination::completed) {
      EXPECT_EQ(s.point, brun_formula(x));
      ++brun_steps;
    }
    const RatVector y = oracle::random_positive(3, 40, 7, rng);
    const CfStep t = cf_step(FS, y);
    if (t.status == Termination::completed) {
      EXPECT_EQ(t.point, fs_formula(y));
      EXPECT_EQ(y[t.letter - 1], *std::min_element(y.begin(), y.end()));
      ++fs_steps;
    }
  }
  EXPECT_GT(brun_steps, 1000);
  EXPECT_GT(fs_steps, 100);
}

TEST(CfStep, DomainCovariance) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const Family f = trial % 2 ? FS : BR;
    const RatVector x = oracle::random_positive(3, 50, 9, rng);
    const CfStep s = cf_step(f, x);
    if (s.status != Termination::completed) continue;
    EXPECT_TRUE(contains(image_domain(Word(f, 3, {s.letter})), x, true));
    EXPECT_TRUE(contains(standard_domain(f, 3), s.point, true));
  }
}

TEST(Orbit, Examples) {
  const OrbitTrace a = orbit(BR, ints({7, 5, 3}), 2);
  ASSERT_FALSE(a.steps.empty());
  EXPECT_EQ(a.steps[0].letter, 3);
  EXPECT_TRUE(oracle::positively_proportional(product(a.word()).apply(a.steps.back().point), a.start));

  const OrbitTrace b = orbit(FS, ints({4, 5, 6}), 0);
  EXPECT_TRUE(b.steps.empty());
  EXPECT_EQ(b.terminated, Termination::completed);

  EXPECT_EQ(orbit(BR, ints({2, 1, 1}), 1).terminated, Termination::hit_boundary);
  EXPECT_THROW(orbit(BR, ints({2, 0, 1}), 1), std::invalid_argument);
}

TEST(Orbit, ExactReconstruction) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Family f = trial % 2 ? FS : BR;
    const int d = f == BR ? 3 : 3 + trial % 2;
    RatVector x = oracle::random_positive(d, 1000, 97, rng);
    if (f == BR) std::sort(x.begin(), x.end(), std::greater<>());
    const OrbitTrace t = orbit(f, x, 30);
    const RatVector last = t.steps.empty() ? t.start : t.steps.back().point;
    EXPECT_TRUE(oracle::positively_proportional(product(t.word()).apply(last), x));
    for (const auto& s : t.steps)
      for (const auto& v : s.point) EXPECT_GT(v, 0);
    if (t.terminated == Termination::completed) EXPECT_EQ(t.steps.size(), 30u);
  }
}

TEST(Lyapunov, PeriodicExactExamples) {
  const LyapunovEstimate fs = periodic_lyapunov(Word(FS, 3, {1, 2, 3}));
  EXPECT_NEAR(fs.gamma1, std::log(6.22226252) / 3, 1e-7);
  EXPECT_NEAR(fs.gamma1, 0.6094, 5e-4);
  EXPECT_NEAR(fs.gamma2, -0.3046, 5e-4);

  const LyapunovEstimate br = periodic_lyapunov(Word(BR, 3, {1, 2, 3}));
  const auto expected = oracle_exponents(Word(BR, 3, {1, 2, 3}));
  EXPECT_NEAR(br.gamma1, expected[0], 1e-9);
  EXPECT_NEAR(br.gamma2, expected[1], 1e-9);
  EXPECT_NEAR(br.gamma1, 0.3893, 5e-4);
  EXPECT_LE(br.stderr1, 1e-6);
  EXPECT_LE(br.stderr2, 1e-6);
  EXPECT_EQ(br.method, LyapunovMethod::periodic_exact);

  const LyapunovEstimate unipotent = periodic_lyapunov(Word(BR, 3, {1}));
  EXPECT_NEAR(unipotent.gamma1, 0.0, 1e-6);
  EXPECT_THROW(periodic_lyapunov(Word(BR, 3)), std::invalid_argument);
}

TEST(Lyapunov, PeriodicSpectrumSumsToZero) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const Word w = oracle::random_word(BR, 3, 1 + trial % 8, rng);
    const LyapunovEstimate e = periodic_lyapunov(w);
    ASSERT_EQ(e.spectrum.size(), 3u);
    EXPECT_NEAR(e.spectrum[0] + e.spectrum[1] + e.spectrum[2], 0.0, 1e-6) << w.to_string();
    EXPECT_GE(e.gamma1, e.gamma2);
    const auto expected = oracle_exponents(w);
    if (is_primitive(product(w)).primitive) EXPECT_NEAR(e.gamma2, expected[1], 1e-6) << w.to_string();
  }
}

TEST(Lyapunov, PeriodicStreamMatchesExactValues) {
  for (const Word& w : {Word(BR, 3, {1, 2, 3}), Word(FS, 3, {1, 2, 3}), Word(BR, 3, {3, 1, 3, 2})}) {
    const LyapunovEstimate exact = periodic_lyapunov(w);
    const long long n = 300000 * static_cast<long long>(w.size());
    const LyapunovEstimate mc = lyapunov_estimate_periodic(w, n);
    EXPECT_NEAR(mc.gamma1, exact.gamma1, 1e-6) << w.to_string();
    EXPECT_NEAR(mc.gamma2, exact.gamma2, 1e-6) << w.to_string();
    EXPECT_EQ(mc.stderr1, 0.0);
  }
}

TEST(Lyapunov, BernoulliSignsAndSum) {
  for (Family f : {BR, FS}) {
    const LyapunovEstimate e = lyapunov_estimate(f, 3, uniform_bernoulli(f, 3, 7), 200000, 8, LyapunovMethod::exterior_power, 2);
    EXPECT_GT(e.gamma1 - 3 * e.stderr1, 0);
    EXPECT_LT(e.gamma2 + 3 * e.stderr2, 0);
    EXPECT_GE(e.gamma1, e.gamma2);
    EXPECT_EQ(e.trials, 8);
  }
}

TEST(Lyapunov, SeminormTrackAgreesWithExteriorPower) {
  const BernoulliSpec spec = uniform_bernoulli(BR, 3, 3);
  const LyapunovEstimate a = lyapunov_estimate(BR, 3, spec, 200000, 6, LyapunovMethod::exterior_power);
  const LyapunovEstimate b = lyapunov_estimate(BR, 3, spec, 200000, 6, LyapunovMethod::seminorm_track);
  EXPECT_NEAR(a.gamma1, b.gamma1, 1e-12);
  EXPECT_NEAR(a.gamma2, b.gamma2, 5e-3);
  EXPECT_EQ(b.method, LyapunovMethod::seminorm_track);
}

TEST(Lyapunov, UnipotentLetterHasZeroExponent) {
  const BernoulliSpec spec{ints({1, 0, 0}), 5};
  const LyapunovEstimate e = lyapunov_estimate(FS, 3, spec, 100000, 1);
  EXPECT_NEAR(e.gamma1, 0.0, 1e-3);
  EXPECT_EQ(e.stderr1, 0.0);
  EXPECT_FALSE(supports_positive_cylinder(FS, 3, spec));
}

TEST(Lyapunov, Reproducible) {
  const BernoulliSpec spec = uniform_bernoulli(FS, 4, 99);
  const LyapunovEstimate a = lyapunov_estimate(FS, 4, spec, 20000, 5, LyapunovMethod::exterior_power, 1);
  const LyapunovEstimate b = lyapunov_estimate(FS, 4, spec, 20000, 5, LyapunovMethod::exterior_power, 3);
  EXPECT_EQ(a, b);
  const BernoulliSpec other = uniform_bernoulli(FS, 4, 100);
  EXPECT_NE(a.gamma1, lyapunov_estimate(FS, 4, other, 20000, 5).gamma1);
}

TEST(Lyapunov, Preconditions) {
  const BernoulliSpec spec = uniform_bernoulli(BR, 3);
  EXPECT_THROW(lyapunov_estimate(BR, 3, spec, 999, 1), std::invalid_argument);
  EXPECT_THROW(lyapunov_estimate(BR, 3, spec, 1000, 0), std::invalid_argument);
  EXPECT_THROW(lyapunov_estimate(BR, 3, BernoulliSpec{ints({1, 1, 0}), 0}, 1000, 1), std::invalid_argument);
  EXPECT_THROW(lyapunov_estimate(BR, 3, BernoulliSpec{ints({1, 0}), 0}, 1000, 1), std::invalid_argument);
}

TEST(Lyapunov, LogIntegrability) {
  EXPECT_NEAR(log_integrability_value(BR, 3, uniform_bernoulli(BR, 3)), std::log(2.0), 1e-15);
  EXPECT_NEAR(log_integrability_value(FS, 3, uniform_bernoulli(FS, 3)), std::log(2.0), 1e-15);
  EXPECT_NEAR(log_integrability_value(FS, 3, BernoulliSpec{ints({0, 1, 0}), 0}), std::log(2.0), 1e-15);
  // FS d = 4: generator row sums reach 2, inverse row sums 2 as well.
  EXPECT_NEAR(log_integrability_value(FS, 4, uniform_bernoulli(FS, 4)), std::log(2.0), 1e-15);
}

TEST(Lyapunov, PositiveCylinderHypothesis) {
  EXPECT_TRUE(supports_positive_cylinder(BR, 3, uniform_bernoulli(BR, 3)));
  EXPECT_TRUE(supports_positive_cylinder(BR, 3, BernoulliSpec{ints({0, 0, 1}), 0}));
  EXPECT_FALSE(supports_positive_cylinder(BR, 3, BernoulliSpec{RatVector{Rational(1, 2), Rational(1, 2), 0}, 0}));
  EXPECT_TRUE(supports_positive_cylinder(FS, 3, uniform_bernoulli(FS, 3)));
}

TEST(Lyapunov, MethodNames) {
  for (auto m : {LyapunovMethod::exterior_power, LyapunovMethod::seminorm_track, LyapunovMethod::periodic_exact}) {
    EXPECT_EQ(parse_lyapunov_method(to_string(m)), m);
  }
  for (auto t : {Termination::completed, Termination::left_image_domains, Termination::hit_boundary}) {
    EXPECT_EQ(parse_termination(to_string(t)), t);
  }
}
