#include "pisotlab/seminorm.hpp"

#include "pisotlab/charpoly.hpp"
#include "pisotlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pisotlab {

SeminormValue hyperplane_seminorm(const ExactMatrix& b, std::span<const Rational> v) {
  const int d = b.dim();
  if (static_cast<int>(v.size()) != d) throw std::invalid_argument("seminorm: dimension mismatch");
  if (d < 2) throw std::invalid_argument("seminorm: needs d >= 2");
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) {
    throw std::invalid_argument("seminorm: v must be nonzero");
  }
  // H_v only depends on the ray of v.
  const IntVector w = clear_denominators(v);

  bool found = false;
  Rational best = 0;
  RatVector best_z;
  std::vector<int> signs(static_cast<std::size_t>(d));
  IntVector row_partial(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const BigInt& wk = w[static_cast<std::size_t>(k)];
    if (wk == 0) continue;
    const BigInt denom = abs(wk);
    const unsigned combos = 1u << (d - 1);
    for (unsigned mask = 0; mask < combos; ++mask) {
      // Signs on the d-1 coordinates other than k.
      BigInt s = 0;
      for (int j = 0, bit = 0; j < d; ++j) {
        if (j == k) {
          signs[static_cast<std::size_t>(j)] = 0;
          continue;
        }
        signs[static_cast<std::size_t>(j)] = (mask >> bit++) & 1u ? -1 : 1;
        s += signs[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
      }
      // z_k = -s / w_k must lie in [-1, 1].
      if (abs(s) > denom) continue;
      // |(Bz)_i| = |w_k T_i - B_ik s| / |w_k|, T_i = sum_{j != k} B_ij sign_j.
      BigInt top = 0;
      for (int i = 0; i < d; ++i) {
        BigInt t = 0;
        for (int j = 0; j < d; ++j) {
          if (j != k && b(i, j) != 0) t += signs[static_cast<std::size_t>(j)] * b(i, j);
        }
        BigInt num = abs(wk * t - b(i, k) * s);
        if (num > top) top = num;
      }
      Rational value(top, denom);
      if (!found || value > best) {
        found = true;
        best = value;
        best_z.assign(static_cast<std::size_t>(d), Rational(0));
        for (int j = 0; j < d; ++j) best_z[static_cast<std::size_t>(j)] = signs[static_cast<std::size_t>(j)];
        best_z[static_cast<std::size_t>(k)] = Rational(-s, wk);
      }
    }
  }
  return SeminormValue{best, best_z};
}

std::string_view to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::certified_le_one:
      return "certified_le_one";
    case CertificateVerdict::strict_contraction:
      return "strict_contraction";
    default:
      return "violation";
  }
}

CertificateVerdict parse_certificate_verdict(std::string_view text) {
  for (auto v : {CertificateVerdict::certified_le_one, CertificateVerdict::strict_contraction,
                 CertificateVerdict::violation}) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown certificate verdict: " + std::string(text));
}

SeminormCertificate cone_seminorm_certify(const ExactMatrix& b, const Cone& cone, int resolution,
                                          int threads) {
  if (resolution < cone.dim()) {
    throw std::invalid_argument("grid resolution must be at least the dimension");
  }
  const auto grid = barycentric_grid(cone.dim(), resolution);
  std::vector<Rational> values(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const RatVector v = cone.point(grid[i].weights);
    values[i] = hyperplane_seminorm(b, v).value;
  });

  SeminormCertificate cert;
  cert.resolution = resolution;
  cert.points = grid.size();
  std::size_t worst = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 1) ++cert.violations;
    if (values[i] > values[worst]) worst = i;
  }
  cert.max_value = values[worst];
  cert.worst = grid[worst];
  if (cert.max_value > 1) {
    cert.verdict = CertificateVerdict::violation;
  } else if (cert.max_value == 1) {
    cert.verdict = CertificateVerdict::certified_le_one;
  } else {
    cert.verdict = CertificateVerdict::strict_contraction;
  }
  return cert;
}

RatVector StochasticMatrix::apply(std::span<const Rational> z) const {
  RatVector out(static_cast<std::size_t>(dim), Rational(0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * z[static_cast<std::size_t>(j)];
  }
  return out;
}

StochasticMatrix stochastic_rep(Family family, int letter, const BarycentricPoint& mu) {
  if (family != Family::FullySubtractive) {
    throw std::invalid_argument("stochastic_rep is only defined for the fully subtractive family");
  }
  const int d = static_cast<int>(mu.weights.size());
  if (d < 2 || letter < 1 || letter > d) throw std::invalid_argument("stochastic_rep: bad letter");
  Rational total = 0;
  for (const auto& w : mu.weights) {
    if (w < 0) throw std::invalid_argument("stochastic_rep: negative weight");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("stochastic_rep: weights must sum to 1");
  StochasticMatrix p;
  p.dim = d;
  p.entries.assign(static_cast<std::size_t>(d * d), Rational(0));
  for (int i = 0; i < d; ++i) p.entries[static_cast<std::size_t>(i * d + i)] = 1;
  for (int j = 0; j < d; ++j) {
    p.entries[static_cast<std::size_t>((letter - 1) * d + j)] = mu.weights[static_cast<std::size_t>(j)];
  }
  return p;
}

std::vector<long double> fs_basis_weights(std::span<const double> v) {
  const auto d = static_cast<long double>(v.size());
  long double sum = 0;
  for (double x : v) sum += x;
  std::vector<long double> mu;
  for (double x : v) mu.push_back(1.0L - (d - 1) * x / sum);
  return mu;
}

long double dobrushin_coefficient(std::span<const long double> stochastic, int dim) {
  long double best = 0;
  for (int r = 0; r < dim; ++r) {
    for (int s = r + 1; s < dim; ++s) {
      long double l1 = 0;
      for (int j = 0; j < dim; ++j) {
        l1 += std::abs(stochastic[static_cast<std::size_t>(r * dim + j)] -
                       stochastic[static_cast<std::size_t>(s * dim + j)]);
      }
      best = std::max(best, l1 / 2);
    }
  }
  return best;
}

double dobrushin_chain_bound(const Word& word) {
  if (word.family() != Family::FullySubtractive) {
    throw std::invalid_argument("dobrushin_chain_bound is only defined for the fully subtractive family");
  }
  if (word.empty() || !is_primitive(product(word)).primitive) {
    throw std::domain_error("dobrushin_chain_bound: word is not primitive");
  }
  const int d = word.dim();
  const auto n = static_cast<std::size_t>(d);
  std::vector<long double> chain(n * n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) chain[i * n + i] = 1;

  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const auto perron = dominant_eigenvector(product(word.rotated(pos)));
    const auto mu = fs_basis_weights(perron.vector);
    const auto k = static_cast<std::size_t>(word.letters()[pos] - 1);
    // chain <- P(x_pos, mu) * chain; P differs from the identity in row k only.
    std::vector<long double> row(n, 0.0L);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) row[j] += mu[m] * chain[m * n + j];
    }
    for (std::size_t j = 0; j < n; ++j) chain[k * n + j] = row[j];
  }
  return static_cast<double>(dobrushin_coefficient(chain, d));
}

EigenvalueBound second_eigenvalue_bound(const Word& word, double tol) {
  const ExactMatrix a = product(word);
  const PerronVector perron = dominant_eigenvector(a, tol);
  EigenvalueBound out;
  const BigInt max_den(1000000);
  for (double x : perron.vector) out.perron_rational.push_back(best_rational_approximation(x, max_den));
  out.value = hyperplane_seminorm(transpose(a), out.perron_rational).value;
  return out;
}

}  // namespace pisotlab
