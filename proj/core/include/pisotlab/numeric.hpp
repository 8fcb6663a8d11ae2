#pragma once

// Exact scalar types shared by every module, plus the handful of
// conversions between exact rationals and floating point that the
// numeric routines need.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pisotlab {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Comma separated rationals, e.g. "7,5,3" or "1/2,1/3,1/6".
RatVector parse_rational_vector(std::string_view text);
std::string format_rational_vector(std::span<const Rational> v, char sep = ',');

/// The exact value of a finite floating point number.
Rational exact_rational(long double x);

/// Best rational approximation with denominator at most max_den
/// (continued fraction convergents and semiconvergents).
Rational best_rational_approximation(long double x, const BigInt& max_den);

/// Largest double <= q and smallest double >= q.
double round_down(const Rational& q);
double round_up(const Rational& q);

double to_double(const Rational& q);
long double to_long_double(const BigInt& n);

/// Scales a nonzero vector by a positive rational so the result is a
/// primitive integer vector (denominators cleared, common factor removed).
IntVector clear_denominators(std::span<const Rational> v);

RatVector to_rational(std::span<const BigInt> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace pisotlab
