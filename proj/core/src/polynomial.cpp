#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pisotlab::poly {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatCoeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Coeffs& p) {
  return static_cast<int>(p.size()) - 1;
}

Coeffs reversed(const Coeffs& p) {
  Coeffs r(p.rbegin(), p.rend());
  trim(r);
  return r;
}

Coeffs primitive_part(Coeffs p) {
  trim(p);
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    for (auto& c : p) c /= g;
  }
  return p;
}

Coeffs to_integer(const RatCoeffs& p) {
  BigInt l = 1;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, denominator(c));
  Coeffs out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(numerator(c) * (l / denominator(c)));
  return primitive_part(std::move(out));
}

RatCoeffs to_rational(const Coeffs& p) {
  return RatCoeffs(p.begin(), p.end());
}

int sign_at(const Coeffs& p, const Rational& x) {
  if (p.empty()) return 0;
  const BigInt& a = numerator(x);
  const BigInt& b = denominator(x);
  BigInt acc = p.back();
  BigInt bpow = 1;
  for (int k = degree(p) - 1; k >= 0; --k) {
    bpow *= b;
    acc = acc * a + p[static_cast<std::size_t>(k)] * bpow;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

Coeffs scale_argument(const Coeffs& p, const Rational& r) {
  const BigInt& a = numerator(r);
  const BigInt& b = denominator(r);
  const int n = degree(p);
  Coeffs out(p.size());
  std::vector<BigInt> apow(p.size()), bpow(p.size());
  apow[0] = 1;
  bpow[0] = 1;
  for (std::size_t k = 1; k < p.size(); ++k) {
    apow[k] = apow[k - 1] * a;
    bpow[k] = bpow[k - 1] * b;
  }
  for (int k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] *
                                       apow[static_cast<std::size_t>(k)] *
                                       bpow[static_cast<std::size_t>(n - k)];
  }
  return primitive_part(std::move(out));
}

std::optional<int> schur_cohn_inside(Coeffs p) {
  trim(p);
  if (p.empty()) return std::nullopt;
  const int n = degree(p);
  if (n == 0) return 0;
  const BigInt a0 = p.front();
  const BigInt an = p.back();
  const BigInt delta = a0 * a0 - an * an;
  if (delta == 0) return std::nullopt;
  // T p = a0 p - an p*, the leading terms cancel.
  Coeffs t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    t[static_cast<std::size_t>(k)] =
        a0 * p[static_cast<std::size_t>(k)] - an * p[static_cast<std::size_t>(n - k)];
  }
  auto inner = schur_cohn_inside(primitive_part(std::move(t)));
  if (!inner) return std::nullopt;
  // Rouche on |z| = 1: T p has the zeros of p (delta > 0) or of p* (delta < 0).
  return delta > 0 ? *inner : n - *inner;
}

std::optional<int> count_inside_radius(const Coeffs& p, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("radius must be positive");
  return schur_cohn_inside(scale_argument(p, r));
}

std::optional<int> count_inside_no_circle(const Coeffs& p, const Rational& r) {
  if (auto direct = count_inside_radius(p, r)) return direct;
  for (int k = 8; k <= 512; k += 8) {
    BigInt den = 1;
    den <<= k;
    // Two nearby offsets in case one of them is degenerate as well.
    for (const Rational& eps : {Rational(1, den), Rational(3, 2 * den)}) {
      auto lo = count_inside_radius(p, r * (1 - eps));
      auto hi = count_inside_radius(p, r * (1 + eps));
      if (lo && hi && *lo == *hi) return lo;
    }
  }
  return std::nullopt;
}

RatCoeffs derivative(const RatCoeffs& p) {
  RatCoeffs d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

std::pair<RatCoeffs, RatCoeffs> divmod(const RatCoeffs& a, const RatCoeffs& b) {
  RatCoeffs rem = a;
  trim(rem);
  RatCoeffs div = b;
  trim(div);
  if (div.empty()) throw std::domain_error("polynomial division by zero");
  if (rem.size() < div.size()) return {RatCoeffs{}, rem};
  RatCoeffs quot(rem.size() - div.size() + 1, Rational(0));
  const Rational lead = div.back();
  while (!rem.empty() && rem.size() >= div.size()) {
    const std::size_t shift = rem.size() - div.size();
    const Rational f = rem.back() / lead;
    quot[shift] = f;
    for (std::size_t i = 0; i < div.size(); ++i) rem[shift + i] -= f * div[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

RatCoeffs gcd(RatCoeffs a, RatCoeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Coeffs exact_quotient(const Coeffs& a, const Coeffs& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.empty()) throw std::logic_error("polynomial division is not exact");
  Coeffs out;
  for (const auto& c : q) {
    if (denominator(c) != 1) throw std::logic_error("quotient is not integral");
    out.push_back(numerator(c));
  }
  trim(out);
  return out;
}

std::vector<Coeffs> square_free_factors(const Coeffs& p) {
  std::vector<Coeffs> factors;
  RatCoeffs f = to_rational(p);
  trim(f);
  if (f.size() <= 1) return factors;
  const RatCoeffs df = derivative(f);
  RatCoeffs a = gcd(f, df);
  RatCoeffs b = divmod(f, a).first;
  RatCoeffs c = divmod(df, a).first;
  auto sub = [](RatCoeffs x, const RatCoeffs& y) {
    if (x.size() < y.size()) x.resize(y.size(), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    trim(x);
    return x;
  };
  RatCoeffs d = sub(c, derivative(b));
  while (b.size() > 1) {
    RatCoeffs g = gcd(b, d);
    factors.push_back(to_integer(g));
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = sub(c, derivative(b));
  }
  return factors;
}

namespace {

std::vector<Coeffs> sturm_sequence(const Coeffs& p) {
  std::vector<RatCoeffs> seq{to_rational(p), derivative(to_rational(p))};
  while (!seq.back().empty()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  std::vector<Coeffs> out;
  for (const auto& s : seq) out.push_back(to_integer(s));
  return out;
}

int variations(const std::vector<Coeffs>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

}  // namespace

int sturm_count(const Coeffs& p, const Rational& a, const Rational& b) {
  if (degree(p) < 1) return 0;
  const auto seq = sturm_sequence(p);
  return variations(seq, a) - variations(seq, b);
}

int real_roots_with_multiplicity(const Coeffs& p, const Rational& a, const Rational& b) {
  int total = 0;
  const auto factors = square_free_factors(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    total += static_cast<int>(i + 1) * sturm_count(factors[i], a, b);
  }
  return total;
}

Coeffs joukowski_reduce(const Coeffs& r) {
  const int deg = degree(r);
  if (deg < 0 || deg % 2 != 0) throw std::logic_error("joukowski_reduce needs even degree");
  const int m = deg / 2;
  // D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}: z^j + z^-j = D_j(z + 1/z).
  std::vector<Coeffs> dickson{Coeffs{2}, Coeffs{0, 1}};
  for (int j = 2; j <= m; ++j) {
    Coeffs next(static_cast<std::size_t>(j + 1), BigInt(0));
    const auto& prev = dickson[static_cast<std::size_t>(j - 1)];
    const auto& prev2 = dickson[static_cast<std::size_t>(j - 2)];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + 1] += prev[i];
    for (std::size_t i = 0; i < prev2.size(); ++i) next[i] -= prev2[i];
    dickson.push_back(std::move(next));
  }
  Coeffs h(static_cast<std::size_t>(m + 1), BigInt(0));
  h[0] = r[static_cast<std::size_t>(m)];
  for (int j = 1; j <= m; ++j) {
    const BigInt& c = r[static_cast<std::size_t>(m + j)];
    const auto& dj = dickson[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < dj.size(); ++i) h[i] += c * dj[i];
  }
  trim(h);
  return h;
}

std::vector<std::complex<long double>> numeric_roots(const Coeffs& p) {
  using C = std::complex<long double>;
  const int n = degree(p);
  std::vector<C> roots;
  if (n < 1) return roots;
  std::vector<long double> a(p.size());
  const long double lead = to_long_double(p.back());
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = to_long_double(p[i]) / lead;

  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
  bound += 1;
  roots.resize(static_cast<std::size_t>(n));
  const C seed(0.4L, 0.9L);
  C power(1, 0);
  for (auto& z : roots) {
    power *= seed;
    z = power * (bound / 2);
  }
  auto eval = [&](C z) {
    C acc(1, 0);
    for (int k = n - 1; k >= 0; --k) acc = acc * z + a[static_cast<std::size_t>(k)];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      C denom(1, 0);
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      if (std::abs(denom) == 0) denom = C(1e-30L, 0);
      const C delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      change = std::max(change, std::abs(delta) / std::max(1.0L, std::abs(roots[i])));
    }
    if (change < 1e-19L) break;
  }
  return roots;
}

Rational cauchy_bound(const Coeffs& p) {
  const int n = degree(p);
  Rational best = 0;
  for (int k = 0; k < n; ++k) {
    Rational q(abs(p[static_cast<std::size_t>(k)]), abs(p.back()));
    if (q > best) best = q;
  }
  return best + 1;
}

}  // namespace pisotlab::poly
