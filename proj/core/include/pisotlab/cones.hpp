#pragma once

// Projective cones spanned by d rational rays: the adapted domains D of the
// two families and their images D^(w) = A^(w) D.

#include "pisotlab/intmat.hpp"

#include <span>
#include <vector>

namespace pisotlab {

class Cone {
 public:
  /// Rays must be nonzero, nonnegative and all of length `dim`.
  Cone(int dim, std::vector<RatVector> rays);

  int dim() const { return dim_; }
  const std::vector<RatVector>& rays() const { return rays_; }

  /// Solves sum_i mu_i ray_i = x exactly. Throws std::domain_error when the
  /// rays are not a basis.
  RatVector coordinates(std::span<const Rational> x) const;

  /// Point sum_i mu_i ray_i.
  RatVector point(std::span<const Rational> mu) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  int dim_;
  std::vector<RatVector> rays_;
};

/// A convex combination of the rays of some cone.
struct BarycentricPoint {
  RatVector weights;
  bool interior() const;
  friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;
};

/// FS: rays f_i = e - e_i. Brun: (1,0,0), (1,1,0), (1,1,1).
Cone standard_domain(Family family, int dim);

/// Membership of the ray through x (scale invariant). Strict means the
/// open cone. Throws std::invalid_argument for x = 0 or negative entries.
bool contains(const Cone& cone, std::span<const Rational> x, bool strict);
bool contains(const Cone& cone, std::span<const BigInt> x, bool strict);

/// The cone M C.
Cone transform(const ExactMatrix& m, const Cone& cone);

/// D^(w) = A^(w) D.
Cone image_domain(const Word& word);

/// Every ray of `inner` lies in the closed cone `outer`.
bool is_subcone(const Cone& inner, const Cone& outer);

/// All weights k/N with every k >= 1 and sum k = N, in decreasing
/// lexicographic order of (k_1, ..., k_d). Empty when N < dim.
std::vector<BarycentricPoint> barycentric_grid(int dim, int resolution);

inline constexpr double kDefaultLocalizeTolerance = 1e-9;

/// True iff the Perron vector of product(word) has barycentric coordinates
/// >= -tol with respect to the rays of image_domain(word). Throws
/// std::domain_error for non-primitive words.
bool localize_check(const Word& word, double tol = kDefaultLocalizeTolerance);

/// Barycentric coordinates (summing to 1) of the Perron vector of
/// product(word) in image_domain(word).
std::vector<double> perron_barycentric(const Word& word);

}  // namespace pisotlab
