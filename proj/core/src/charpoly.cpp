#include "pisotlab/charpoly.hpp"

#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pisotlab {

// IntPolynomial -------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  poly::trim(coefficients_);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  poly::trim(coefficients_);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string IntPolynomial::format_coefficients() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ' ';
    out += coefficients_[i].str();
  }
  return out.empty() ? "0" : out;
}

IntPolynomial IntPolynomial::parse_coefficients(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BigInt> coefficients;
  std::string token;
  while (in >> token) {
    try {
      coefficients.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad polynomial coefficient: " + token);
    }
  }
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial char_poly(const ExactMatrix& m) {
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  const int n = m.dim();
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1), BigInt(0));
  c[static_cast<std::size_t>(n)] = 1;
  ExactMatrix mk(n);
  for (int k = 1; k <= n; ++k) {
    ExactMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    const ExactMatrix amk = m * mk;
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += amk(i, i);
    c[static_cast<std::size_t>(n - k)] = -trace / k;
  }
  return IntPolynomial(std::move(c));
}

// Root location -------------------------------------------------------------

namespace {

struct CircleSplit {
  int zero_roots = 0;
  poly::Coeffs off_circle;  // p / gcd(p, p*), no roots on |z| = 1
  int at_plus_one = 0;
  int at_minus_one = 0;
  poly::Coeffs reciprocal;  // self-reciprocal, even degree, no roots at +-1
  int circle_in_reciprocal = 0;
};

// Every root on |z| = 1 divides gcd(p, p*). That gcd is (anti)reciprocal;
// after removing x -+ 1 it is z^m h(z + 1/z) and unit circle roots are the
// real roots of h in (-2, 2), counted exactly with Sturm sequences.
CircleSplit split_circle(const IntPolynomial& p) {
  CircleSplit out;
  poly::Coeffs q = p.coefficients();
  if (q.empty()) throw std::invalid_argument("zero polynomial has no root counts");
  while (q.size() > 1 && q.front() == 0) {
    q.erase(q.begin());
    ++out.zero_roots;
  }
  poly::Coeffs g = poly::to_integer(poly::gcd(poly::to_rational(q), poly::to_rational(poly::reversed(q))));
  out.off_circle = poly::exact_quotient(q, g);

  const poly::Coeffs x_minus_one{-1, 1};
  const poly::Coeffs x_plus_one{1, 1};
  while (poly::degree(g) >= 1 && poly::sign_at(g, Rational(1)) == 0) {
    g = poly::exact_quotient(g, x_minus_one);
    ++out.at_plus_one;
  }
  while (poly::degree(g) >= 1 && poly::sign_at(g, Rational(-1)) == 0) {
    g = poly::exact_quotient(g, x_plus_one);
    ++out.at_minus_one;
  }
  if (poly::degree(g) >= 1) {
    if (poly::reversed(g) != g) {
      // g* = -g forces g(1) = 0, which was stripped above.
      throw std::logic_error("gcd with reciprocal is not self-reciprocal");
    }
    const poly::Coeffs h = poly::joukowski_reduce(g);
    out.circle_in_reciprocal = 2 * poly::real_roots_with_multiplicity(h, Rational(-2), Rational(2));
  }
  out.reciprocal = std::move(g);
  return out;
}

}  // namespace

std::optional<RootCounts> locate_roots(const IntPolynomial& p) {
  const CircleSplit split = split_circle(p);
  const auto inside_off = poly::count_inside_no_circle(split.off_circle, Rational(1));
  if (!inside_off) return std::nullopt;
  const int reciprocal_degree = std::max(0, poly::degree(split.reciprocal));
  RootCounts counts;
  counts.on_circle = split.at_plus_one + split.at_minus_one + split.circle_in_reciprocal;
  // Off-circle roots of a self-reciprocal polynomial pair up as (z, 1/z).
  counts.inside = split.zero_roots + *inside_off +
                  (reciprocal_degree - split.circle_in_reciprocal) / 2;
  counts.outside = p.degree() - counts.inside - counts.on_circle;
  return counts;
}

std::optional<int> count_roots_in_open_unit_disk(const IntPolynomial& p) {
  auto counts = locate_roots(p);
  if (!counts) return std::nullopt;
  return counts->inside;
}

int count_roots_on_unit_circle(const IntPolynomial& p) {
  const CircleSplit split = split_circle(p);
  return split.at_plus_one + split.at_minus_one + split.circle_in_reciprocal;
}

std::string_view to_string(CircleVerdict v) {
  switch (v) {
    case CircleVerdict::no:
      return "no";
    case CircleVerdict::yes:
      return "yes";
    default:
      return "indeterminate";
  }
}

CircleVerdict has_root_on_unit_circle(const IntPolynomial& p) {
  try {
    return count_roots_on_unit_circle(p) > 0 ? CircleVerdict::yes : CircleVerdict::no;
  } catch (const std::logic_error&) {
    return CircleVerdict::indeterminate;
  }
}

// Modulus enclosures --------------------------------------------------------

namespace {

// Count of roots in |z| < r at a radius where the Schur-Cohn reduction does
// not degenerate, moving r in direction `dir` (-1 or +1) when it does.
std::pair<int, Rational> certified_count(const poly::Coeffs& p, Rational r, int dir) {
  BigInt den = 1;
  den <<= 60;
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (auto c = poly::count_inside_radius(p, r)) return {*c, r};
    r *= 1 + Rational(dir * (attempt + 1), den);
  }
  throw std::runtime_error("could not find a non-degenerate radius");
}

}  // namespace

Interval root_modulus_enclosure(const IntPolynomial& p, int k, double rel_width) {
  const int n = p.degree();
  if (k < 1 || k > n) throw std::invalid_argument("root rank out of range");
  const poly::Coeffs& c = p.coefficients();
  // rank counted from the smallest modulus
  const int rank = n - k + 1;

  int zero_roots = 0;
  while (zero_roots < n && c[static_cast<std::size_t>(zero_roots)] == 0) ++zero_roots;
  if (rank <= zero_roots) return Interval{0.0, 0.0};

  auto accept = [&](const Rational& lo, const Rational& hi) -> std::optional<Interval> {
    // m_rank >= lo iff fewer than `rank` roots lie in |z| < lo;
    // m_rank < hi iff at least `rank` roots lie in |z| < hi.
    const auto [below, lo_used] = certified_count(c, lo, -1);
    if (below > rank - 1) return std::nullopt;
    const auto [above, hi_used] = certified_count(c, hi, +1);
    if (above < rank) return std::nullopt;
    return Interval{round_down(lo_used), round_up(hi_used)};
  };

  auto roots = poly::numeric_roots(c);
  std::vector<long double> moduli;
  for (const auto& z : roots) moduli.push_back(std::abs(z));
  std::sort(moduli.begin(), moduli.end());
  const long double guess = moduli[static_cast<std::size_t>(rank - 1)];
  if (guess > 0 && std::isfinite(guess)) {
    const Rational center = exact_rational(guess);
    for (long double delta = rel_width / 4; delta < 0.5L; delta *= 16) {
      const Rational d = exact_rational(delta);
      if (auto iv = accept(center * (1 - d), center * (1 + d))) return *iv;
    }
  }

  // Bisection from the Cauchy bound.
  Rational lo = 0;
  Rational hi = poly::cauchy_bound(c);
  for (int iter = 0; iter < 200; ++iter) {
    if (lo > 0 && (hi - lo) <= Rational(exact_rational(rel_width)) * hi) break;
    Rational mid = (lo + hi) / 2;
    const auto [count, used] = certified_count(c, mid, +1);
    if (count >= rank) {
      hi = used;
    } else {
      lo = used;
    }
  }
  return Interval{round_down(lo), round_up(hi)};
}

// Pisot verdict -------------------------------------------------------------

std::string_view to_string(PisotReason r) {
  switch (r) {
    case PisotReason::ok:
      return "ok";
    case PisotReason::root_on_unit_circle:
      return "root_on_unit_circle";
    case PisotReason::multiple_outside_roots:
      return "multiple_outside_roots";
    case PisotReason::dominant_not_simple:
      return "dominant_not_simple";
    default:
      return "indeterminate";
  }
}

PisotReason parse_pisot_reason(std::string_view text) {
  for (auto r : {PisotReason::ok, PisotReason::root_on_unit_circle,
                 PisotReason::multiple_outside_roots, PisotReason::dominant_not_simple,
                 PisotReason::indeterminate}) {
    if (to_string(r) == text) return r;
  }
  throw std::invalid_argument("unknown Pisot reason: " + std::string(text));
}

PisotReport pisot_check(const ExactMatrix& m) {
  if (!m.nonnegative()) {
    throw std::invalid_argument("pisot_check: matrix has a negative entry");
  }
  PisotReport report;
  report.char_poly = char_poly(m);
  const int d = m.dim();
  const auto counts = locate_roots(report.char_poly);
  if (!counts) {
    report.reason = PisotReason::indeterminate;
  } else {
    report.counts = *counts;
    if (counts->inside == d - 1 && counts->on_circle == 0) {
      report.is_pisot = true;
      report.reason = PisotReason::ok;
    } else if (counts->outside >= 2) {
      report.reason = PisotReason::multiple_outside_roots;
    } else if (counts->outside == 0 && counts->on_circle >= 2) {
      report.reason = PisotReason::dominant_not_simple;
    } else {
      report.reason = PisotReason::root_on_unit_circle;
    }
  }
  report.lambda1 = root_modulus_enclosure(report.char_poly, 1);
  if (d >= 2) report.lambda2_modulus = root_modulus_enclosure(report.char_poly, 2);
  return report;
}

// Perron vector -------------------------------------------------------------

PerronVector dominant_eigenvector(const ExactMatrix& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!is_primitive(m).primitive) {
    throw std::domain_error("dominant_eigenvector: matrix is not primitive");
  }
  const int n = m.dim();
  std::vector<long double> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = to_long_double(m(i, j));
  }
  auto multiply = [&](const std::vector<long double>& v) {
    std::vector<long double> out(static_cast<std::size_t>(n), 0.0L);
    for (int i = 0; i < n; ++i) {
      long double s = 0;
      for (int j = 0; j < n; ++j) s += a[static_cast<std::size_t>(i * n + j)] * v[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = s;
    }
    return out;
  };

  std::vector<long double> v(static_cast<std::size_t>(n), 1.0L);
  constexpr int kMaxIterations = 200000;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    auto w = multiply(v);
    const long double lambda = *std::max_element(w.begin(), w.end());
    long double residual = 0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(w[static_cast<std::size_t>(i)] -
                                             lambda * v[static_cast<std::size_t>(i)]));
    }
    residual /= lambda;
    if (residual <= tol) {
      PerronVector out;
      out.vector.assign(v.begin(), v.end());
      out.eigenvalue = static_cast<double>(lambda);
      out.residual = static_cast<double>(residual);
      out.iterations = iter;
      return out;
    }
    for (auto& x : w) x /= lambda;
    v = std::move(w);
  }
  throw std::runtime_error("dominant_eigenvector: power iteration did not converge");
}

}  // namespace pisotlab
