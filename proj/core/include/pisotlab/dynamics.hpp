#pragma once

// The projective continued fraction maps f x = (A^(i))^{-1} x on D^(i),
// exact orbit coding, and Lyapunov exponent estimates of the cocycle for
// Bernoulli and periodic letter streams.

#include "pisotlab/intmat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pisotlab {

enum class Termination { completed, left_image_domains, hit_boundary };
std::string_view to_string(Termination t);
Termination parse_termination(std::string_view text);

struct CfStep {
  /// completed on success, otherwise why no step was taken.
  Termination status = Termination::completed;
  int letter = 0;
  RatVector point;
};

/// One step of the continued fraction map. Exact; refuses points on domain
/// boundaries (hit_boundary) and FS points outside every D^(i)
/// (left_image_domains). The dimension is x.size().
CfStep cf_step(Family family, std::span<const Rational> x);

struct OrbitStep {
  int letter = 0;
  RatVector point;
  friend bool operator==(const OrbitStep&, const OrbitStep&) = default;
};

struct OrbitTrace {
  Family family = Family::Brun;
  RatVector start;
  std::vector<OrbitStep> steps;
  Termination terminated = Termination::completed;

  /// The letters as a word (for product reconstruction).
  Word word() const;
  friend bool operator==(const OrbitTrace&, const OrbitTrace&) = default;
};

/// Up to n steps of cf_step; stops early at the first refusal.
/// Throws std::invalid_argument unless x is strictly positive.
OrbitTrace orbit(Family family, std::span<const Rational> x, int n);

struct BernoulliSpec {
  RatVector weights;
  std::uint64_t seed = 0;
};

/// Uniform weights over the family's alphabet.
BernoulliSpec uniform_bernoulli(Family family, int dim, std::uint64_t seed = 0);

enum class LyapunovMethod { exterior_power, seminorm_track, periodic_exact };
std::string_view to_string(LyapunovMethod m);
LyapunovMethod parse_lyapunov_method(std::string_view text);

struct LyapunovEstimate {
  double gamma1 = 0;
  double gamma2 = 0;
  double stderr1 = 0;
  double stderr2 = 0;
  long long steps = 0;
  int trials = 0;
  LyapunovMethod method = LyapunovMethod::exterior_power;
  /// All d exponents, filled by periodic_lyapunov only.
  std::vector<double> spectrum;
  friend bool operator==(const LyapunovEstimate&, const LyapunovEstimate&) = default;
};

inline constexpr long long kMinLyapunovSteps = 1000;

/// Monte-Carlo estimate for i.i.d. letters. Trial t draws from
/// std::mt19937_64 seeded with (seed XOR t). gamma1 comes from a positive
/// vector pushed by the transposed cocycle, gamma1 + gamma2 from a 2-vector
/// under the second exterior power; logs are accumulated after a burn-in of
/// min(1000, n/10) steps. stderr is the standard error of the trial means
/// (0 for a single trial).
LyapunovEstimate lyapunov_estimate(Family family, int dim, const BernoulliSpec& spec, long long n,
                                   int trials,
                                   LyapunovMethod method = LyapunovMethod::exterior_power,
                                   int threads = 1);

/// Same estimator on the deterministic stream w w w ...; the burn-in is
/// rounded up to a multiple of |w| so the averaging window is whole periods.
LyapunovEstimate lyapunov_estimate_periodic(const Word& word, long long n);

/// Exact periodic-orbit exponents: gamma_k = log(k-th largest root modulus
/// of char_poly(product(w))) / |w| from validated enclosures; stderr is the
/// enclosure width. Throws std::domain_error on a zero eigenvalue.
LyapunovEstimate periodic_lyapunov(const Word& word);

/// sum_i w_i max(log ||A^(i)||_inf, log ||(A^(i))^{-1}||_inf).
double log_integrability_value(Family family, int dim, const BernoulliSpec& spec);

/// Whether the letters with positive weight can form a word with a
/// positive product (all letters for FS, letter 3 for Brun).
bool supports_positive_cylinder(Family family, int dim, const BernoulliSpec& spec);

}  // namespace pisotlab
