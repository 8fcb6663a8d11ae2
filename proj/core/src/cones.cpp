#include "pisotlab/cones.hpp"

#include "pisotlab/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pisotlab {

Cone::Cone(int dim, std::vector<RatVector> rays) : dim_(dim), rays_(std::move(rays)) {
  if (dim < 1) throw std::invalid_argument("cone dimension must be positive");
  for (const auto& ray : rays_) {
    if (static_cast<int>(ray.size()) != dim) {
      throw std::invalid_argument("cone ray has the wrong dimension");
    }
    bool nonzero = false;
    for (const auto& x : ray) {
      if (x < 0) throw std::invalid_argument("cone rays must be nonnegative");
      if (x != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("cone rays must be nonzero");
  }
}

RatVector Cone::coordinates(std::span<const Rational> x) const {
  if (static_cast<int>(rays_.size()) != dim_) {
    throw std::domain_error("unsupported cone: rays do not form a basis");
  }
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("point has the wrong dimension");
  }
  const int n = dim_;
  // Columns are the rays; augmented with x.
  std::vector<RatVector> a(static_cast<std::size_t>(n), RatVector(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = rays_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    a[i][n] = x[static_cast<std::size_t>(i)];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("unsupported cone: rays do not form a basis");
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RatVector mu(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = a[i][n] / a[i][i];
  return mu;
}

RatVector Cone::point(std::span<const Rational> mu) const {
  if (mu.size() != rays_.size()) throw std::invalid_argument("weight count must match ray count");
  RatVector x(static_cast<std::size_t>(dim_), Rational(0));
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    if (mu[r] == 0) continue;
    for (int i = 0; i < dim_; ++i) x[static_cast<std::size_t>(i)] += mu[r] * rays_[r][static_cast<std::size_t>(i)];
  }
  return x;
}

bool BarycentricPoint::interior() const {
  return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w > 0; });
}

Cone standard_domain(Family family, int dim) {
  if (!valid_dimension(family, dim)) {
    throw std::invalid_argument("invalid dimension for family");
  }
  std::vector<RatVector> rays;
  if (family == Family::FullySubtractive) {
    for (int i = 0; i < dim; ++i) {
      RatVector f(static_cast<std::size_t>(dim), Rational(1));
      f[static_cast<std::size_t>(i)] = 0;
      rays.push_back(std::move(f));
    }
  } else {
    rays = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  }
  return Cone(dim, std::move(rays));
}

bool contains(const Cone& cone, std::span<const Rational> x, bool strict) {
  bool nonzero = false;
  for (const auto& v : x) {
    if (v < 0) throw std::invalid_argument("contains: point must be nonnegative");
    if (v != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("contains: point must be nonzero");
  const RatVector mu = cone.coordinates(x);
  return std::all_of(mu.begin(), mu.end(),
                     [strict](const Rational& m) { return strict ? m > 0 : m >= 0; });
}

bool contains(const Cone& cone, std::span<const BigInt> x, bool strict) {
  const RatVector q = to_rational(x);
  return contains(cone, q, strict);
}

Cone transform(const ExactMatrix& m, const Cone& cone) {
  if (m.dim() != cone.dim()) throw std::invalid_argument("transform: dimension mismatch");
  std::vector<RatVector> rays;
  for (const auto& ray : cone.rays()) rays.push_back(m.apply(std::span<const Rational>(ray)));
  return Cone(cone.dim(), std::move(rays));
}

Cone image_domain(const Word& word) {
  return transform(product(word), standard_domain(word.family(), word.dim()));
}

bool is_subcone(const Cone& inner, const Cone& outer) {
  return std::all_of(inner.rays().begin(), inner.rays().end(),
                     [&](const RatVector& ray) { return contains(outer, ray, false); });
}

std::vector<BarycentricPoint> barycentric_grid(int dim, int resolution) {
  std::vector<BarycentricPoint> out;
  if (dim < 1 || resolution < dim) return out;
  // Compositions of N into d positive parts, largest first part first.
  std::vector<int> parts(static_cast<std::size_t>(dim), 1);
  auto emit = [&] {
    BarycentricPoint p;
    for (int k : parts) p.weights.emplace_back(k, resolution);
    out.push_back(std::move(p));
  };
  // Recursive enumeration keeps the ordering obvious.
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == dim - 1) {
      parts[static_cast<std::size_t>(index)] = remaining;
      emit();
      return;
    }
    const int slots_after = dim - index - 1;
    for (int k = remaining - slots_after; k >= 1; --k) {
      parts[static_cast<std::size_t>(index)] = k;
      self(self, index + 1, remaining - k);
    }
  };
  fill(fill, 0, resolution);
  return out;
}

std::vector<double> perron_barycentric(const Word& word) {
  const ExactMatrix m = product(word);
  const PerronVector perron = dominant_eigenvector(m);
  RatVector v;
  for (double x : perron.vector) v.push_back(exact_rational(x));
  const RatVector mu = image_domain(word).coordinates(v);
  Rational total = 0;
  for (const auto& x : mu) total += x;
  std::vector<double> out;
  for (const auto& x : mu) out.push_back(to_double(x / total));
  return out;
}

bool localize_check(const Word& word, double tol) {
  const auto mu = perron_barycentric(word);
  return std::all_of(mu.begin(), mu.end(), [tol](double m) { return m >= -tol; });
}

}  // namespace pisotlab
