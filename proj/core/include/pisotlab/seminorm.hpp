#pragma once

// The hyperplane semi-norm ||B||_v = max { ||Bz||_inf : <v,z> = 0, ||z||_inf <= 1 },
// its sampled supremum over a cone, and the two bounds on the second
// eigenvalue modulus that it yields.

#include "pisotlab/cones.hpp"
#include "pisotlab/intmat.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pisotlab {

struct SeminormValue {
  Rational value;
  /// A vertex z of H_v intersected with the unit cube where the max is attained.
  RatVector argmax;
};

/// Exact, by enumerating the vertices of H_v intersected with [-1,1]^d:
/// every vertex has at least d-1 coordinates equal to +-1. Throws
/// std::invalid_argument for v = 0 or d < 2.
SeminormValue hyperplane_seminorm(const ExactMatrix& b, std::span<const Rational> v);

enum class CertificateVerdict { certified_le_one, violation, strict_contraction };
std::string_view to_string(CertificateVerdict v);
CertificateVerdict parse_certificate_verdict(std::string_view text);

struct SeminormCertificate {
  std::string label;
  int resolution = 0;
  std::size_t points = 0;
  /// Grid points with a semi-norm above one.
  std::size_t violations = 0;
  Rational max_value;
  BarycentricPoint worst;
  CertificateVerdict verdict = CertificateVerdict::violation;
};

inline constexpr int kDefaultGridResolution = 12;

/// Max of hyperplane_seminorm(b, v) over v on barycentric_grid(cone, N).
/// This samples the supremum over the cone; it is not a proof for every v.
SeminormCertificate cone_seminorm_certify(const ExactMatrix& b, const Cone& cone, int resolution,
                                          int threads = 1);

/// d x d row-stochastic matrix with exact entries, row major.
struct StochasticMatrix {
  int dim = 0;
  std::vector<Rational> entries;
  const Rational& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i * dim + j)];
  }
  RatVector apply(std::span<const Rational> z) const;
};

/// For v = sum mu_i f_i in D_FS, transpose(A_FS^(k)) acts on H_v as the
/// identity with row k replaced by mu. Throws for the Brun family.
StochasticMatrix stochastic_rep(Family family, int letter, const BarycentricPoint& mu);

/// Coordinates of v in the basis f_i = e - e_i, scaled to sum to one.
std::vector<long double> fs_basis_weights(std::span<const double> v);

/// 1/2 max over row pairs of the L1 distance between rows.
long double dobrushin_coefficient(std::span<const long double> stochastic, int dim);

/// Dobrushin coefficient of P(x_{p-1}, mu_{p-1}) ... P(x_0, mu_0), where
/// mu_i are the f-basis weights of the Perron vector of the rotation of the
/// word starting at i. Bounds the second eigenvalue modulus of product(w).
/// FS only; throws std::domain_error for non-primitive words.
double dobrushin_chain_bound(const Word& word);

struct EigenvalueBound {
  /// ||transpose(A)||_v at the rationalized Perron vector, exact.
  Rational value;
  RatVector perron_rational;
};

/// Perron vector rounded coordinate-wise to denominators <= 10^6, then
/// the exact hyperplane semi-norm of the transposed product there.
EigenvalueBound second_eigenvalue_bound(const Word& word, double tol = 1e-12);

}  // namespace pisotlab
