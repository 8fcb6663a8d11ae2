#pragma once

// Reference computations for the tests. Each one takes a different route
// from the library: schoolbook int64 arithmetic, permutation expansions,
// LP duality, float eigensolvers.

#include "pisotlab/intmat.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

Mat to_mat(const pisotlab::ExactMatrix& m);
Mat multiply(const Mat& a, const Mat& b);
Mat identity(int d);

/// Leibniz expansion over all permutations.
long long det(const Mat& m);

/// Coefficients of det(xI - M), constant term first, from sums of
/// principal minors.
std::vector<long long> char_poly(const Mat& m);

/// Smallest n <= limit with M^n > 0, or -1.
int primitive_exponent(const Mat& m, int limit);

/// Eigenvalues from Eigen's general solver.
std::vector<std::complex<double>> eigenvalues(const Mat& m);
/// Roots of a polynomial (constant term first) via the companion matrix.
std::vector<std::complex<double>> roots(const std::vector<long long>& coefficients);
/// Moduli sorted in decreasing order.
std::vector<double> sorted_moduli(const std::vector<std::complex<double>>& z);

/// Positive eigenvector of the largest eigenvalue, max-norm 1.
std::vector<double> perron_vector(const Mat& m);

/// max { |(Bz)_i| : <v,z> = 0, |z|_inf <= 1 } by LP duality:
/// for each row b, min over lambda of |b - lambda v|_1, with lambda at a
/// breakpoint b_j / v_j.
pisotlab::Rational seminorm_dual(const pisotlab::ExactMatrix& b, const pisotlab::RatVector& v);

/// Lower estimate of the semi-norm from random points of H_v in the cube.
double seminorm_sampled(const pisotlab::ExactMatrix& b, const std::vector<double>& v, int samples,
                        std::mt19937_64& rng);

/// Random word of the given length.
pisotlab::Word random_word(pisotlab::Family family, int dim, int length, std::mt19937_64& rng);

/// Random strictly positive rational vector with entries p/q, p in [1, pmax], q in [1, qmax].
pisotlab::RatVector random_positive(int dim, int pmax, int qmax, std::mt19937_64& rng);

/// True iff a = c b for some rational c > 0.
bool positively_proportional(const pisotlab::RatVector& a, const pisotlab::RatVector& b);

}  // namespace oracle
