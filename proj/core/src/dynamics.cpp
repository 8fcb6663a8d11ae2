#include "pisotlab/dynamics.hpp"

#include "pisotlab/charpoly.hpp"
#include "pisotlab/cones.hpp"
#include "pisotlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pisotlab {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::completed:
      return "completed";
    case Termination::left_image_domains:
      return "left_image_domains";
    default:
      return "hit_boundary";
  }
}

Termination parse_termination(std::string_view text) {
  for (auto t : {Termination::completed, Termination::left_image_domains, Termination::hit_boundary}) {
    if (to_string(t) == text) return t;
  }
  throw std::invalid_argument("unknown termination: " + std::string(text));
}

// Continued fraction map ----------------------------------------------------

namespace {

struct MapData {
  Family family;
  int dim;
  Cone domain;
  std::vector<ExactMatrix> inverses;
};

MapData make_map(Family family, int dim) {
  if (!valid_dimension(family, dim)) {
    throw std::invalid_argument("point dimension does not match the family");
  }
  MapData data{family, dim, standard_domain(family, dim), {}};
  for (int letter = 1; letter <= alphabet_size(family, dim); ++letter) {
    data.inverses.push_back(unimodular_inverse(family_generator(family, dim, letter)));
  }
  return data;
}

bool nonnegative_nonzero(const RatVector& u) {
  bool nonzero = false;
  for (const auto& x : u) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

CfStep step_with(const MapData& map, std::span<const Rational> x) {
  CfStep out;
  if (static_cast<int>(x.size()) != map.dim) {
    throw std::invalid_argument("cf_step: point has the wrong dimension");
  }
  if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v <= 0; })) {
    out.status = Termination::hit_boundary;
    return out;
  }
  if (map.family == Family::FullySubtractive) {
    const auto smallest = *std::min_element(x.begin(), x.end());
    if (std::count(x.begin(), x.end(), smallest) > 1) {
      out.status = Termination::hit_boundary;
      return out;
    }
  }
  int hits = 0;
  bool on_closure = false;
  for (std::size_t i = 0; i < map.inverses.size(); ++i) {
    RatVector u = map.inverses[i].apply(x);
    if (!nonnegative_nonzero(u)) continue;
    if (contains(map.domain, u, true)) {
      ++hits;
      out.letter = static_cast<int>(i) + 1;
      out.point = std::move(u);
    } else if (contains(map.domain, u, false)) {
      on_closure = true;
    }
  }
  if (hits == 1) {
    out.status = Termination::completed;
    return out;
  }
  out.letter = 0;
  out.point.clear();
  out.status = (hits > 1 || on_closure) ? Termination::hit_boundary : Termination::left_image_domains;
  return out;
}

}  // namespace

CfStep cf_step(Family family, std::span<const Rational> x) {
  return step_with(make_map(family, static_cast<int>(x.size())), x);
}

Word OrbitTrace::word() const {
  std::vector<int> letters;
  for (const auto& s : steps) letters.push_back(s.letter);
  return Word(family, static_cast<int>(start.size()), std::move(letters));
}

OrbitTrace orbit(Family family, std::span<const Rational> x, int n) {
  if (x.empty() || std::any_of(x.begin(), x.end(), [](const Rational& v) { return v <= 0; })) {
    throw std::invalid_argument("orbit: start point must be strictly positive");
  }
  if (n < 0) throw std::invalid_argument("orbit: step count must be nonnegative");
  const MapData map = make_map(family, static_cast<int>(x.size()));
  OrbitTrace trace;
  trace.family = family;
  trace.start.assign(x.begin(), x.end());
  RatVector current = trace.start;
  for (int k = 0; k < n; ++k) {
    CfStep s = step_with(map, current);
    if (s.status != Termination::completed) {
      trace.terminated = s.status;
      return trace;
    }
    current = s.point;
    trace.steps.push_back(OrbitStep{s.letter, std::move(s.point)});
  }
  trace.terminated = Termination::completed;
  return trace;
}

// Lyapunov exponents --------------------------------------------------------

std::string_view to_string(LyapunovMethod m) {
  switch (m) {
    case LyapunovMethod::exterior_power:
      return "exterior_power";
    case LyapunovMethod::seminorm_track:
      return "seminorm_track";
    default:
      return "periodic_exact";
  }
}

LyapunovMethod parse_lyapunov_method(std::string_view text) {
  for (auto m : {LyapunovMethod::exterior_power, LyapunovMethod::seminorm_track,
                 LyapunovMethod::periodic_exact}) {
    if (to_string(m) == text) return m;
  }
  throw std::invalid_argument("unknown Lyapunov method: " + std::string(text));
}

BernoulliSpec uniform_bernoulli(Family family, int dim, std::uint64_t seed) {
  const int a = alphabet_size(family, dim);
  return BernoulliSpec{RatVector(static_cast<std::size_t>(a), Rational(1, a)), seed};
}

namespace {

using Dense = std::vector<double>;

// Transposed generators and their second compounds, row major.
struct CocycleData {
  int d = 0;
  int pairs = 0;
  std::vector<Dense> transposed;
  std::vector<Dense> forward;
  std::vector<Dense> compound;
};

CocycleData make_cocycle(Family family, int dim) {
  CocycleData c;
  c.d = dim;
  c.pairs = dim * (dim - 1) / 2;
  std::vector<std::pair<int, int>> index;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) index.emplace_back(i, j);
  }
  for (int letter = 1; letter <= alphabet_size(family, dim); ++letter) {
    const ExactMatrix a = family_generator(family, dim, letter);
    Dense fwd(static_cast<std::size_t>(dim * dim)), bt(static_cast<std::size_t>(dim * dim));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        fwd[static_cast<std::size_t>(i * dim + j)] = a(i, j).convert_to<double>();
        bt[static_cast<std::size_t>(j * dim + i)] = a(i, j).convert_to<double>();
      }
    }
    // (wedge^2 B)_{(ij),(kl)} = B_ik B_jl - B_il B_jk
    Dense comp(static_cast<std::size_t>(c.pairs * c.pairs));
    for (int r = 0; r < c.pairs; ++r) {
      const auto [i, j] = index[static_cast<std::size_t>(r)];
      for (int s = 0; s < c.pairs; ++s) {
        const auto [k, l] = index[static_cast<std::size_t>(s)];
        comp[static_cast<std::size_t>(r * c.pairs + s)] =
            bt[static_cast<std::size_t>(i * dim + k)] * bt[static_cast<std::size_t>(j * dim + l)] -
            bt[static_cast<std::size_t>(i * dim + l)] * bt[static_cast<std::size_t>(j * dim + k)];
      }
    }
    c.forward.push_back(std::move(fwd));
    c.transposed.push_back(std::move(bt));
    c.compound.push_back(std::move(comp));
  }
  return c;
}

void multiply(const Dense& m, int n, const Dense& x, Dense& out) {
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += m[static_cast<std::size_t>(i * n + j)] * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
}

double normalize(Dense& x) {
  double s = 0;
  for (double v : x) s = std::max(s, std::abs(v));
  for (double& v : x) v /= s;
  return s;
}

// Sum of logs of many factors, taking the log only when the running product
// drifts far from 1.
class LogAccumulator {
 public:
  void add(double factor) {
    product_ *= factor;
    if (product_ > 1e150 || product_ < 1e-150) flush();
  }
  double total() {
    flush();
    return sum_;
  }

 private:
  void flush() {
    sum_ += std::log(product_);
    product_ = 1;
  }
  double product_ = 1;
  double sum_ = 0;
};

Dense initial_two_vector(int pairs) {
  Dense w(static_cast<std::size_t>(pairs));
  for (int k = 0; k < pairs; ++k) w[static_cast<std::size_t>(k)] = std::sqrt(static_cast<double>(k + 2));
  return w;
}

struct TrialResult {
  double gamma1 = 0;
  double gamma2 = 0;
};

template <class NextLetter>
TrialResult exterior_power_trial(const CocycleData& c, long long n, long long burn, NextLetter next) {
  Dense u(static_cast<std::size_t>(c.d), 1.0), u_next(u.size());
  Dense w = initial_two_vector(c.pairs), w_next(w.size());
  LogAccumulator top, wedge;
  for (long long step = 0; step < n; ++step) {
    const std::size_t letter = next();
    multiply(c.transposed[letter], c.d, u, u_next);
    multiply(c.compound[letter], c.pairs, w, w_next);
    std::swap(u, u_next);
    std::swap(w, w_next);
    const double s1 = normalize(u);
    const double s2 = normalize(w);
    if (step >= burn) {
      top.add(s1);
      wedge.add(s2);
    }
  }
  const double window = static_cast<double>(n - burn);
  TrialResult r;
  r.gamma1 = top.total() / window;
  r.gamma2 = wedge.total() / window - r.gamma1;
  return r;
}

// gamma2 as the growth of z in H_{v(T^k x)}, where v(x) spans D_inf(x) and
// is approximated by pushing e through `lookahead` future letters.
TrialResult seminorm_track_trial(const CocycleData& c, long long n, long long burn,
                                 const std::vector<std::uint8_t>& letters) {
  const int d = c.d;
  const auto total = static_cast<long long>(letters.size());
  std::vector<double> dirs(static_cast<std::size_t>((n + 1) * d));
  Dense v(static_cast<std::size_t>(d), 1.0), tmp(static_cast<std::size_t>(d));
  for (long long k = total - 1; k >= 0; --k) {
    multiply(c.forward[letters[static_cast<std::size_t>(k)]], d, v, tmp);
    std::swap(v, tmp);
    normalize(v);
    if (k <= n) std::copy(v.begin(), v.end(), dirs.begin() + k * d);
  }
  auto project = [&](Dense& z, long long k) {
    const double* vk = dirs.data() + k * d;
    double zv = 0, vv = 0;
    for (int i = 0; i < d; ++i) {
      zv += z[static_cast<std::size_t>(i)] * vk[i];
      vv += vk[i] * vk[i];
    }
    for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] -= zv / vv * vk[i];
  };

  Dense u(static_cast<std::size_t>(d), 1.0), u_next(u.size());
  Dense z(static_cast<std::size_t>(d)), z_next(z.size());
  for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::sqrt(static_cast<double>(i + 2));
  project(z, 0);
  normalize(z);
  LogAccumulator top, second;
  for (long long step = 0; step < n; ++step) {
    const std::size_t letter = letters[static_cast<std::size_t>(step)];
    multiply(c.transposed[letter], d, u, u_next);
    multiply(c.transposed[letter], d, z, z_next);
    std::swap(u, u_next);
    std::swap(z, z_next);
    project(z, step + 1);
    const double s1 = normalize(u);
    const double s2 = normalize(z);
    if (step >= burn) {
      top.add(s1);
      second.add(s2);
    }
  }
  const double window = static_cast<double>(n - burn);
  return TrialResult{top.total() / window, second.total() / window};
}

class LetterSampler {
 public:
  LetterSampler(const RatVector& weights, std::uint64_t seed) : rng_(seed) {
    double running = 0;
    int last_positive = -1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      running += to_double(weights[i]);
      cumulative_.push_back(running);
      if (weights[i] > 0) last_positive = static_cast<int>(i);
    }
    for (std::size_t i = static_cast<std::size_t>(last_positive); i < cumulative_.size(); ++i) {
      cumulative_[i] = 2.0;
    }
  }

  std::size_t operator()() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    std::size_t i = 0;
    while (u >= cumulative_[i]) ++i;
    return i;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<double> cumulative_;
};

void validate_weights(Family family, int dim, const RatVector& weights) {
  if (static_cast<int>(weights.size()) != alphabet_size(family, dim)) {
    throw std::invalid_argument("one weight per letter is required");
  }
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("weights must sum to 1");
}

long long burn_in(long long n) {
  return std::min<long long>(1000, n / 10);
}

LyapunovEstimate aggregate(const std::vector<TrialResult>& results, long long n, LyapunovMethod method) {
  LyapunovEstimate e;
  e.steps = n;
  e.trials = static_cast<int>(results.size());
  e.method = method;
  const double t = static_cast<double>(results.size());
  double m1 = 0, m2 = 0;
  for (const auto& r : results) {
    m1 += r.gamma1;
    m2 += r.gamma2;
  }
  m1 /= t;
  m2 /= t;
  double v1 = 0, v2 = 0;
  for (const auto& r : results) {
    v1 += (r.gamma1 - m1) * (r.gamma1 - m1);
    v2 += (r.gamma2 - m2) * (r.gamma2 - m2);
  }
  if (results.size() > 1) {
    e.stderr1 = std::sqrt(v1 / (t - 1) / t);
    e.stderr2 = std::sqrt(v2 / (t - 1) / t);
  }
  e.gamma1 = std::max(m1, m2);
  e.gamma2 = std::min(m1, m2);
  if (m2 > m1) std::swap(e.stderr1, e.stderr2);
  return e;
}

}  // namespace

LyapunovEstimate lyapunov_estimate(Family family, int dim, const BernoulliSpec& spec, long long n,
                                   int trials, LyapunovMethod method, int threads) {
  if (n < kMinLyapunovSteps) throw std::invalid_argument("lyapunov_estimate: need at least 1000 steps");
  if (trials < 1) throw std::invalid_argument("lyapunov_estimate: need at least one trial");
  if (method == LyapunovMethod::periodic_exact) {
    throw std::invalid_argument("periodic_exact is not a Monte-Carlo method");
  }
  validate_weights(family, dim, spec.weights);
  const CocycleData cocycle = make_cocycle(family, dim);
  const long long burn = burn_in(n);
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  parallel_for(results.size(), threads, [&](std::size_t t) {
    LetterSampler sampler(spec.weights, spec.seed ^ static_cast<std::uint64_t>(t));
    if (method == LyapunovMethod::exterior_power) {
      results[t] = exterior_power_trial(cocycle, n, burn, sampler);
    } else {
      constexpr long long kLookahead = 256;
      std::vector<std::uint8_t> letters(static_cast<std::size_t>(n + kLookahead));
      for (auto& l : letters) l = static_cast<std::uint8_t>(sampler());
      results[t] = seminorm_track_trial(cocycle, n, burn, letters);
    }
  });
  return aggregate(results, n, method);
}

LyapunovEstimate lyapunov_estimate_periodic(const Word& word, long long n) {
  if (word.empty()) throw std::invalid_argument("periodic stream needs a nonempty word");
  if (n < kMinLyapunovSteps) throw std::invalid_argument("lyapunov_estimate: need at least 1000 steps");
  const CocycleData cocycle = make_cocycle(word.family(), word.dim());
  const auto period = static_cast<long long>(word.size());
  const long long burn = (burn_in(n) + period - 1) / period * period;
  std::size_t pos = 0;
  auto next = [&]() {
    const auto letter = static_cast<std::size_t>(word.letters()[pos] - 1);
    pos = (pos + 1) % word.size();
    return letter;
  };
  return aggregate({exterior_power_trial(cocycle, n, burn, next)}, n, LyapunovMethod::exterior_power);
}

LyapunovEstimate periodic_lyapunov(const Word& word) {
  if (word.empty()) throw std::invalid_argument("periodic_lyapunov needs a nonempty word");
  const IntPolynomial p = char_poly(product(word));
  const double period = static_cast<double>(word.size());
  LyapunovEstimate e;
  e.steps = static_cast<long long>(word.size());
  e.trials = 1;
  e.method = LyapunovMethod::periodic_exact;
  std::vector<double> widths;
  for (int k = 1; k <= word.dim(); ++k) {
    const Interval modulus = root_modulus_enclosure(p, k);
    if (modulus.lo <= 0) throw std::domain_error("periodic_lyapunov: zero eigenvalue");
    const double lo = std::log(modulus.lo) / period;
    const double hi = std::log(modulus.hi) / period;
    e.spectrum.push_back(lo + (hi - lo) / 2);
    widths.push_back(hi - lo);
  }
  e.gamma1 = e.spectrum[0];
  e.gamma2 = e.spectrum.size() > 1 ? e.spectrum[1] : e.spectrum[0];
  e.stderr1 = widths[0];
  e.stderr2 = widths.size() > 1 ? widths[1] : widths[0];
  return e;
}

double log_integrability_value(Family family, int dim, const BernoulliSpec& spec) {
  validate_weights(family, dim, spec.weights);
  double total = 0;
  for (int letter = 1; letter <= alphabet_size(family, dim); ++letter) {
    const auto& w = spec.weights[static_cast<std::size_t>(letter - 1)];
    if (w == 0) continue;
    const ExactMatrix a = family_generator(family, dim, letter);
    const double forward = std::log(a.inf_norm().convert_to<double>());
    const double backward = std::log(unimodular_inverse(a).inf_norm().convert_to<double>());
    total += to_double(w) * std::max(forward, backward);
  }
  return total;
}

bool supports_positive_cylinder(Family family, int dim, const BernoulliSpec& spec) {
  validate_weights(family, dim, spec.weights);
  if (family == Family::Brun) return spec.weights[2] > 0;
  return std::all_of(spec.weights.begin(), spec.weights.end(), [](const Rational& w) { return w > 0; });
}

}  // namespace pisotlab
