#pragma once

// Low level exact polynomial arithmetic used by the root locator. Integer
// polynomials are coefficient vectors, constant term first, with no
// trailing (high degree) zeros.

#include "pisotlab/numeric.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace pisotlab::poly {

using Coeffs = std::vector<BigInt>;
using RatCoeffs = std::vector<Rational>;

void trim(Coeffs& p);
void trim(RatCoeffs& p);
int degree(const Coeffs& p);

/// x^n p(1/x) for n = deg p.
Coeffs reversed(const Coeffs& p);

/// Divides by the positive gcd of the coefficients; signs are kept.
Coeffs primitive_part(Coeffs p);

/// Positive multiple of p with coprime integer coefficients.
Coeffs to_integer(const RatCoeffs& p);
RatCoeffs to_rational(const Coeffs& p);

int sign_at(const Coeffs& p, const Rational& x);

/// Positive multiple of p(r x) with integer coefficients, r > 0.
Coeffs scale_argument(const Coeffs& p, const Rational& r);

/// Exact Schur-Cohn count of roots in the open unit disk. A completed
/// reduction also certifies that p has no root on the unit circle.
/// nullopt when a reduction step degenerates (|a0| = |an|).
std::optional<int> schur_cohn_inside(Coeffs p);

/// Roots with |z| < r; nullopt on degeneracy (e.g. a root with |z| = r).
std::optional<int> count_inside_radius(const Coeffs& p, const Rational& r);

/// For p with no root on |z| = r: brackets r by r(1 -+ eps) until both
/// counts agree, which certifies an empty annulus.
std::optional<int> count_inside_no_circle(const Coeffs& p, const Rational& r);

RatCoeffs derivative(const RatCoeffs& p);
/// Quotient and remainder over Q. Throws on division by zero polynomial.
std::pair<RatCoeffs, RatCoeffs> divmod(const RatCoeffs& a, const RatCoeffs& b);
/// Monic gcd over Q (zero polynomial when both are zero).
RatCoeffs gcd(RatCoeffs a, RatCoeffs b);
/// a / b for b | a; throws std::logic_error when the division is not exact.
Coeffs exact_quotient(const Coeffs& a, const Coeffs& b);

/// Yun decomposition p = c * f1 * f2^2 * ... ; element i-1 holds f_i.
std::vector<Coeffs> square_free_factors(const Coeffs& p);

/// Number of distinct real roots of a square-free p in the open interval
/// (a, b); p must not vanish at a or b.
int sturm_count(const Coeffs& p, const Rational& a, const Rational& b);

/// Real roots in (a, b) with multiplicity, p nonzero at a and b.
int real_roots_with_multiplicity(const Coeffs& p, const Rational& a, const Rational& b);

/// For self-reciprocal r of degree 2m returns h of degree m with
/// r(z) = z^m h(z + 1/z).
Coeffs joukowski_reduce(const Coeffs& r);

/// Durand-Kerner approximations; used only as starting guesses.
std::vector<std::complex<long double>> numeric_roots(const Coeffs& p);

/// 1 + max |a_k / a_n|.
Rational cauchy_bound(const Coeffs& p);

}  // namespace pisotlab::poly
