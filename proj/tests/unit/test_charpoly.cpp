#include "oracles.hpp"
#include "pisotlab/charpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pisotlab;

namespace {

const Family FS = Family::FullySubtractive;
const Family BR = Family::Brun;

IntPolynomial from_ll(const std::vector<long long>& c) {
  std::vector<BigInt> b;
  for (auto x : c) b.emplace_back(x);
  return IntPolynomial(std::move(b));
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(product(Word(FS, 3, {1, 2, 3}))), IntPolynomial({-1, 5, -7, 1}));
  EXPECT_EQ(char_poly(ExactMatrix::identity(3)), IntPolynomial({-1, 3, -3, 1}));
  EXPECT_EQ(char_poly(product(Word(BR, 3, {1, 2, 3}))), IntPolynomial({1, -1, -3, 1}));
  EXPECT_EQ(char_poly(product(Word(FS, 3, {1, 2, 3}))).to_string(), "x^3 - 7x^2 + 5x - 1");
}

TEST(CharPoly, AgreesWithPrincipalMinors) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Family f = trial % 2 ? FS : BR;
    const int d = f == BR ? 3 : 2 + trial % 4;
    const Word w = oracle::random_word(f, d, trial % 9, rng);
    const ExactMatrix m = product(w);
    const IntPolynomial p = char_poly(m);
    EXPECT_EQ(p, from_ll(oracle::char_poly(oracle::to_mat(m)))) << w.to_string();
    EXPECT_TRUE(p.monic());
    EXPECT_EQ(p.degree(), d);
    EXPECT_EQ(p.coefficient(0), (d % 2 ? -1 : 1) * m.determinant());
  }
}

TEST(CharPoly, GeneralIntegerMatrix) {
  const ExactMatrix m({{2, -3, 5}, {7, 0, -1}, {4, 4, 9}});
  EXPECT_EQ(char_poly(m), from_ll(oracle::char_poly(oracle::to_mat(m))));
}

TEST(PolynomialText, RoundTrip) {
  const IntPolynomial p({-1, 5, -7, 1});
  EXPECT_EQ(p.format_coefficients(), "-1 5 -7 1");
  EXPECT_EQ(IntPolynomial::parse_coefficients("-1 5 -7 1"), p);
  EXPECT_EQ(IntPolynomial({1, -1, 0, 1}).to_string(), "x^3 - x + 1");
}

TEST(UnitDisk, Examples) {
  EXPECT_EQ(count_roots_in_open_unit_disk(IntPolynomial({-1, 5, -7, 1})), 2);
  EXPECT_EQ(count_roots_in_open_unit_disk(IntPolynomial({-1, 3, -3, 1})), 0);
  EXPECT_EQ(count_roots_in_open_unit_disk(IntPolynomial({1, -3, 1})), 1);
}

TEST(UnitCircle, Examples) {
  EXPECT_EQ(has_root_on_unit_circle(IntPolynomial({1, 1, -3, 1})), CircleVerdict::yes);
  EXPECT_EQ(has_root_on_unit_circle(IntPolynomial({-1, 5, -7, 1})), CircleVerdict::no);
  EXPECT_EQ(has_root_on_unit_circle(IntPolynomial({1, -3, 1})), CircleVerdict::no);
}

TEST(UnitCircle, CyclotomicAndReciprocalFactors) {
  const IntPolynomial cyclo3({1, 1, 1});
  const IntPolynomial quad({1, -3, 1});
  const IntPolynomial x2p1({1, 0, 1});
  EXPECT_EQ(has_root_on_unit_circle(cyclo3), CircleVerdict::yes);
  EXPECT_EQ(count_roots_on_unit_circle(cyclo3), 2);
  const IntPolynomial mixed = multiply(quad, x2p1);
  EXPECT_EQ(count_roots_on_unit_circle(mixed), 2);
  EXPECT_EQ(locate_roots(mixed), (RootCounts{1, 2, 1}));
  // Salem-type quartic: two real roots off the circle, two on it.
  const IntPolynomial salem({1, -1, -1, -1, 1});
  EXPECT_EQ(locate_roots(salem), (RootCounts{1, 2, 1}));
  // Repeated circle roots are counted with multiplicity.
  EXPECT_EQ(locate_roots(multiply(x2p1, x2p1)), (RootCounts{0, 4, 0}));
  EXPECT_EQ(locate_roots(IntPolynomial({-1, 3, -3, 1})), (RootCounts{0, 3, 0}));
  // Reciprocal pairs off the circle.
  EXPECT_EQ(locate_roots(multiply(quad, IntPolynomial({1, 3, 1}))), (RootCounts{2, 0, 2}));
}

TEST(UnitDisk, AgreesWithCompanionEigenvalues) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> coef(-9, 9);
  int checked = 0;
  while (checked < 300) {
    const int deg = 2 + static_cast<int>(rng() % 5);
    std::vector<long long> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = coef(rng);
    c.back() = 1 + static_cast<long long>(rng() % 3);
    if (c[0] == 0) continue;
    const auto moduli = oracle::sorted_moduli(oracle::roots(c));
    bool near_circle = false;
    for (double m : moduli) near_circle |= std::abs(m - 1) < 1e-6;
    if (near_circle) continue;
    int inside = 0;
    for (double m : moduli) inside += m < 1;
    const auto counts = locate_roots(from_ll(c));
    ASSERT_TRUE(counts.has_value());
    EXPECT_EQ(counts->inside, inside);
    EXPECT_EQ(counts->on_circle, 0);
    EXPECT_EQ(counts->inside + counts->on_circle + counts->outside, deg);
    ++checked;
  }
}

TEST(UnitCircle, RandomProductsOfCircleFactors) {
  // Products of cyclotomic and off-circle factors: the circle count is known by construction.
  const std::vector<std::pair<IntPolynomial, int>> factors = {
      {IntPolynomial({-1, 1}), 1},      {IntPolynomial({1, 1}), 1},      {IntPolynomial({1, 1, 1}), 2},
      {IntPolynomial({1, 0, 1}), 2},    {IntPolynomial({1, -1, 1}), 2},  {IntPolynomial({1, -3, 1}), 0},
      {IntPolynomial({-1, -1, 1}), 0},  {IntPolynomial({1, 0, -4, 1}), 0}, {IntPolynomial({1, 1, 1, 1, 1}), 4}};
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p({1});
    int on = 0;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const auto& f = factors[rng() % factors.size()];
      p = multiply(p, f.first);
      on += f.second;
    }
    EXPECT_EQ(count_roots_on_unit_circle(p), on) << p.to_string();
    const auto counts = locate_roots(p);
    ASSERT_TRUE(counts);
    EXPECT_EQ(counts->on_circle, on);
    EXPECT_EQ(has_root_on_unit_circle(p), on > 0 ? CircleVerdict::yes : CircleVerdict::no);
  }
}

TEST(PisotCheck, Examples) {
  const PisotReport a = pisot_check(product(Word(FS, 3, {1, 2, 3})));
  EXPECT_TRUE(a.is_pisot);
  EXPECT_EQ(a.reason, PisotReason::ok);
  EXPECT_GT(a.lambda1.lo, 6.22);
  EXPECT_LT(a.lambda1.hi, 6.23);
  EXPECT_GT(a.lambda2_modulus.lo, 0.40);
  EXPECT_LT(a.lambda2_modulus.hi, 0.41);

  const PisotReport b = pisot_check(product(Word(BR, 3, {1, 2})));
  EXPECT_FALSE(b.is_pisot);
  EXPECT_EQ(b.reason, PisotReason::root_on_unit_circle);

  const PisotReport c = pisot_check(ExactMatrix::identity(3));
  EXPECT_FALSE(c.is_pisot);
  EXPECT_THROW(pisot_check(ExactMatrix({{1, -1}, {0, 1}})), std::invalid_argument);
}

TEST(PisotCheck, ReasonsForOtherFailures) {
  // diag-like block with two expanding eigenvalues
  const ExactMatrix two_out({{2, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}});
  EXPECT_EQ(pisot_check(two_out).reason, PisotReason::multiple_outside_roots);
  EXPECT_EQ(pisot_check(ExactMatrix::identity(2)).reason, PisotReason::dominant_not_simple);
  EXPECT_EQ(pisot_check(ExactMatrix({{1, 1}, {1, 0}})).reason, PisotReason::ok);
}

TEST(PisotCheck, EnclosuresContainOracleModuli) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 150; ++trial) {
    const Family f = trial % 2 ? FS : BR;
    const int d = f == BR ? 3 : 3 + trial % 2;
    Word w = oracle::random_word(f, d, 2 + trial % 7, rng);
    const ExactMatrix m = product(w);
    const PisotReport r = pisot_check(m);
    const auto moduli = oracle::sorted_moduli(oracle::eigenvalues(oracle::to_mat(m)));
    const double slack = 1e-7 * moduli[0];
    EXPECT_LE(r.lambda1.lo, moduli[0] + slack);
    EXPECT_GE(r.lambda1.hi, moduli[0] - slack);
    EXPECT_EQ(r.counts.inside + r.counts.on_circle + r.counts.outside, d);
    if (r.is_pisot) {
      EXPECT_LE(r.lambda2_modulus.lo, moduli[1] + 1e-7);
      EXPECT_GE(r.lambda2_modulus.hi, moduli[1] - 1e-7);
      EXPECT_LT(r.lambda1.width(), 1e-6 * r.lambda1.hi);
    }
  }
}

TEST(PisotCheck, ModuliMultiplyToOne) {
  // log lambda1 = -sum of the remaining log moduli, checked from enclosures.
  for (const Word& w : {Word(FS, 3, {1, 2, 3}), Word(BR, 3, {1, 2, 3}), Word(BR, 3, {3, 3, 1, 2, 3})}) {
    const IntPolynomial p = char_poly(product(w));
    double lo = 0, hi = 0;
    for (int k = 1; k <= 3; ++k) {
      const Interval e = root_modulus_enclosure(p, k);
      lo += std::log(e.lo);
      hi += std::log(e.hi);
    }
    EXPECT_LE(lo, 1e-12);
    EXPECT_GE(hi, -1e-12);
  }
}

TEST(PisotCheck, PrimitiveWordsAreShortPisot) {
  for (int len = 1; len <= 6; ++len) {
    for (const auto& w : words_of_length(BR, 3, len)) {
      if (w.contains_letter(3)) EXPECT_TRUE(pisot_check(product(w)).is_pisot) << w.to_string();
    }
    for (const auto& w : words_of_length(FS, 3, len)) {
      if (is_primitive(product(w)).primitive) EXPECT_TRUE(pisot_check(product(w)).is_pisot) << w.to_string();
    }
  }
}

TEST(ModulusEnclosure, SimpleRootsAreTight) {
  const IntPolynomial p({1, -1, -3, 1});
  const auto z = oracle::sorted_moduli(oracle::roots({1, -1, -3, 1}));
  for (int k = 1; k <= 3; ++k) {
    const Interval e = root_modulus_enclosure(p, k);
    EXPECT_TRUE(e.contains(z[k - 1]) || std::abs(e.mid() - z[k - 1]) < 1e-12);
    EXPECT_LE(e.width(), 1e-9 * e.hi);
  }
}

TEST(DominantEigenvector, Examples) {
  const ExactMatrix m({{1, 1, 2}, {1, 2, 3}, {1, 2, 4}});
  const PerronVector v = dominant_eigenvector(m);
  const auto expected = oracle::perron_vector(oracle::to_mat(m));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(v.vector[i], expected[i], 1e-9);
  EXPECT_NEAR(v.vector[0], 0.5437, 5e-4);
  EXPECT_NEAR(v.vector[1], 0.8393, 5e-4);
  EXPECT_DOUBLE_EQ(v.vector[2], 1.0);
  EXPECT_LE(v.residual, kDefaultEigenvectorTolerance);

  const PerronVector g = dominant_eigenvector(ExactMatrix({{2, 1}, {1, 1}}));
  EXPECT_NEAR(g.vector[0] / g.vector[1], (1 + std::sqrt(5.0)) / 2, 1e-10);

  EXPECT_THROW(dominant_eigenvector(ExactMatrix::identity(3)), std::domain_error);
}

TEST(DominantEigenvector, ResidualContract) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = oracle::random_word(BR, 3, 3 + trial % 10, rng);
    if (!is_primitive(product(w)).primitive) continue;
    const PerronVector v = dominant_eigenvector(product(w));
    EXPECT_LE(v.residual, kDefaultEigenvectorTolerance);
    for (double x : v.vector) EXPECT_GT(x, 0);
  }
}
