#pragma once

// Characteristic polynomials and exact location of their roots relative to
// the unit circle. The Pisot verdict is decided by counting, never by
// comparing floating point eigenvalues.

#include "pisotlab/intmat.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pisotlab {

/// Integer polynomial, coefficients stored from the constant term upwards.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  const BigInt& coefficient(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }
  bool monic() const { return !coefficients_.empty() && coefficients_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;

  /// Human form, e.g. "x^3 - 7x^2 + 5x - 1".
  std::string to_string() const;

  /// Text form: space separated coefficients, constant term first.
  std::string format_coefficients() const;
  static IntPolynomial parse_coefficients(std::string_view text);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// det(xI - M), exact (Faddeev-LeVerrier with exact integer division).
IntPolynomial char_poly(const ExactMatrix& m);

struct RootCounts {
  int inside = 0;
  int on_circle = 0;
  int outside = 0;
  friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

/// Counts of roots with |z| < 1, |z| = 1 and |z| > 1, with multiplicity.
/// nullopt only when the radius perturbation used for degenerate
/// Schur-Cohn reductions fails to separate the circle (never observed in
/// practice; reported upstream as "indeterminate").
std::optional<RootCounts> locate_roots(const IntPolynomial& p);

/// Number of roots in the open unit disk, with multiplicity.
std::optional<int> count_roots_in_open_unit_disk(const IntPolynomial& p);

enum class CircleVerdict { no, yes, indeterminate };
std::string_view to_string(CircleVerdict v);

/// Certified decision whether p vanishes somewhere on |z| = 1.
CircleVerdict has_root_on_unit_circle(const IntPolynomial& p);

/// Number of roots on |z| = 1 with multiplicity (exact).
int count_roots_on_unit_circle(const IntPolynomial& p);

/// Closed real interval [lo, hi] with outward rounded endpoints.
struct Interval {
  double lo = 0;
  double hi = 0;
  double width() const { return hi - lo; }
  double mid() const { return lo + (hi - lo) / 2; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Validated enclosure of the k-th largest root modulus (k = 1 is the
/// spectral radius of a companion matrix), with multiplicity. The relative
/// width target is met whenever the roots are simple; clusters get wider
/// but still valid enclosures.
Interval root_modulus_enclosure(const IntPolynomial& p, int k, double rel_width = 1e-10);

enum class PisotReason {
  ok,
  root_on_unit_circle,
  multiple_outside_roots,
  dominant_not_simple,
  indeterminate
};
std::string_view to_string(PisotReason r);
PisotReason parse_pisot_reason(std::string_view text);

struct PisotReport {
  bool is_pisot = false;
  PisotReason reason = PisotReason::indeterminate;
  IntPolynomial char_poly;
  /// Spectral radius (the Perron root for nonnegative input).
  Interval lambda1;
  /// Largest modulus among the remaining d-1 roots.
  Interval lambda2_modulus;
  RootCounts counts;
};

/// Pisot iff d-1 roots lie in the open unit disk and none on the circle.
/// Throws std::invalid_argument on a negative entry.
PisotReport pisot_check(const ExactMatrix& m);

struct PerronVector {
  /// Strictly positive, max-norm 1.
  std::vector<double> vector;
  double eigenvalue = 0;
  /// ||Mv - lambda v||_inf / lambda at return.
  double residual = 0;
  int iterations = 0;
};

inline constexpr double kDefaultEigenvectorTolerance = 1e-12;

/// Power iteration in extended precision. Refuses non-primitive input
/// (std::domain_error) since the positive eigenvector need not be unique.
PerronVector dominant_eigenvector(const ExactMatrix& m,
                                  double tol = kDefaultEigenvectorTolerance);

}  // namespace pisotlab
