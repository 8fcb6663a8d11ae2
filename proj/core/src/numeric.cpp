#include "pisotlab/numeric.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pisotlab {

std::string to_string(const Rational& q) {
  return q.str();
}

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed.empty()) {
    throw std::invalid_argument("empty rational");
  }
  const auto slash = trimmed.find('/');
  auto parse_int = [&](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(trimmed));
  }
  BigInt num = parse_int(trimmed.substr(0, slash));
  BigInt den = parse_int(trimmed.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  return Rational(num, den);
}

RatVector parse_rational_vector(std::string_view text) {
  RatVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::string format_rational_vector(std::span<const Rational> v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

Rational exact_rational(long double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("non-finite value has no rational form");
  }
  if (x == 0) return Rational(0);
  const bool negative = x < 0;
  int exponent = 0;
  long double mantissa = std::frexp(negative ? -x : x, &exponent);
  // 64 mantissa bits cover both double and x87 long double.
  mantissa = std::ldexp(mantissa, 64);
  exponent -= 64;
  BigInt num(static_cast<unsigned long long>(mantissa));
  if (negative) num = -num;
  if (exponent >= 0) {
    return Rational(num << exponent);
  }
  BigInt den(1);
  den <<= -exponent;
  return Rational(num, den);
}

Rational best_rational_approximation(long double x, const BigInt& max_den) {
  const Rational target = exact_rational(x);
  // Convergents p_k/q_k of the exact binary value.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = target;
  while (true) {
    BigInt a = numerator(rest) / denominator(rest);
    if (numerator(rest) < 0 && a * denominator(rest) != numerator(rest)) a -= 1;
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Best semiconvergent that still fits.
      BigInt k = (max_den - q0) / q1;
      Rational semi(k * p1 + p0, k * q1 + q0);
      Rational conv(p1, q1);
      return abs(semi - target) < abs(conv - target) ? semi : conv;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) return Rational(p1, q1);
    rest = 1 / frac;
  }
}

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

long double to_long_double(const BigInt& n) {
  return n.convert_to<long double>();
}

double round_down(const Rational& q) {
  double d = q.convert_to<double>();
  while (Rational(d) > q) {
    d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  }
  return d;
}

double round_up(const Rational& q) {
  double d = q.convert_to<double>();
  while (Rational(d) < q) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
  }
  return d;
}

IntVector clear_denominators(std::span<const Rational> v) {
  BigInt lcm_den = 1;
  for (const auto& q : v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
  }
  IntVector out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& q : v) {
    out.push_back(numerator(q) * (lcm_den / denominator(q)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& n : out) n /= g;
  }
  return out;
}

RatVector to_rational(std::span<const BigInt> v) {
  return RatVector(v.begin(), v.end());
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pisotlab
