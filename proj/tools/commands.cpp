#include "commands.hpp"

#include "pisotlab/cones.hpp"
#include "pisotlab/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

namespace pisotlab::cli {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PISOTLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Outer tolerance on the semi-norm and Dobrushin bounds.
constexpr double kBoundSlack = 1e-6;
// Float eigenvalue moduli closer than this to one are not decided.
constexpr double kOracleBand = 1e-4;
// Two-sided 99% normal quantile.
constexpr double kZ99 = 2.58;

bool expected_primitive(const Word& w) {
  if (w.family() == Family::Brun) return w.contains_letter(3);
  for (int letter = 1; letter <= w.dim(); ++letter) {
    if (!w.contains_letter(letter)) return false;
  }
  return true;
}

std::string ray_text(const RatVector& ray) {
  const IntVector ints = clear_denominators(ray);
  std::string out;
  for (std::size_t i = 0; i < ints.size(); ++i) {
    if (i) out += ',';
    out += ints[i].str();
  }
  return out;
}

WordRecord check_word(const Word& w, bool oracle) {
  const ExactMatrix m = product(w);
  const PisotReport rep = pisot_check(m);
  WordRecord r;
  r.word = w.to_string();
  r.primitive = is_primitive(m).primitive;
  r.primitive_expected = expected_primitive(w);
  r.pisot = rep.is_pisot;
  r.reason = std::string(to_string(rep.reason));
  r.lambda1 = round12_outward(rep.lambda1);
  r.lambda2_modulus = round12_outward(rep.lambda2_modulus);
  if (r.primitive) {
    r.lambda2_seminorm_bound = second_eigenvalue_bound(w).value;
    if (w.family() == Family::FullySubtractive) r.dobrushin_bound = round12(dobrushin_chain_bound(w));
    r.localized = localize_check(w);
  }
  if (oracle) {
    if (auto o = oracle_is_pisot(m)) r.oracle_agrees = (*o == rep.is_pisot);
  }
  return r;
}

}  // namespace

std::optional<bool> oracle_is_pisot(const ExactMatrix& m) {
  const int d = m.dim();
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = m(i, j).convert_to<double>();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  if (solver.info() != Eigen::Success) return std::nullopt;
  std::vector<double> moduli;
  for (int i = 0; i < d; ++i) moduli.push_back(std::abs(solver.eigenvalues()[i]));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  for (double x : moduli) {
    if (std::abs(x - 1) < kOracleBand) return std::nullopt;
  }
  if (d == 1) return false;
  return moduli[0] > 1 && moduli[1] < 1;
}

EnumerateReport run_enumerate(const EnumerateOptions& opt) {
  if (opt.max_len < 1) throw std::invalid_argument("--max-len must be at least 1");
  if (!valid_dimension(opt.family, opt.dim)) throw std::invalid_argument("invalid dimension for the family");
  const auto alphabet = static_cast<std::uint64_t>(alphabet_size(opt.family, opt.dim));
  std::uint64_t total = 0, layer = 1;
  for (int len = 1; len <= opt.max_len; ++len) {
    if (layer > opt.cap / alphabet) throw ResourceCapExceeded("word count exceeds the cap");
    layer *= alphabet;
    total += layer;
    if (total > opt.cap) throw ResourceCapExceeded("word count exceeds the cap");
  }

  std::vector<Word> words;
  words.reserve(total);
  for (int len = 1; len <= opt.max_len; ++len) {
    for (auto& w : words_of_length(opt.family, opt.dim, len)) words.push_back(std::move(w));
  }

  EnumerateReport r;
  r.family = std::string(family_tag(opt.family));
  r.dim = opt.dim;
  r.max_len = opt.max_len;
  r.oracle = opt.oracle;
  r.records.resize(words.size());
  parallel_for(words.size(), opt.threads, [&](std::size_t i) { r.records[i] = check_word(words[i], opt.oracle); });

  for (const auto& w : r.records) {
    ++r.summary.words_checked;
    if (w.primitive != w.primitive_expected || (w.primitive && !w.pisot)) ++r.summary.mismatches;
    const double lambda2 = w.lambda2_modulus.hi;
    if ((w.lambda2_seminorm_bound && to_double(*w.lambda2_seminorm_bound) + kBoundSlack < lambda2) ||
        (w.dobrushin_bound && *w.dobrushin_bound + kBoundSlack < lambda2)) {
      ++r.summary.bound_failures;
    }
    if (w.localized == false) ++r.summary.localization_failures;
    if (w.oracle_agrees == false) ++r.summary.oracle_disagreements;
  }
  return r;
}

int exit_code(const EnumerateReport& r) {
  const auto& s = r.summary;
  return s.mismatches + s.bound_failures + s.localization_failures == 0 ? kOk : kMismatch;
}

CertifyReport run_certify(const CertifyOptions& opt) {
  if (!valid_dimension(opt.family, opt.dim)) throw std::invalid_argument("invalid dimension for the family");
  if (opt.grid < opt.dim) throw std::invalid_argument("--grid must be at least the dimension");
  std::vector<Word> words = opt.words;
  if (words.empty()) {
    for (int letter = 1; letter <= alphabet_size(opt.family, opt.dim); ++letter) {
      words.emplace_back(opt.family, opt.dim, std::vector<int>{letter});
    }
  }
  CertifyReport r;
  r.family = std::string(family_tag(opt.family));
  r.dim = opt.dim;
  r.grid = opt.grid;
  for (const auto& w : words) {
    if (w.family() != opt.family || w.dim() != opt.dim) {
      throw std::invalid_argument("word " + w.to_string() + " does not match the family");
    }
    const Cone cone = opt.family == Family::FullySubtractive ? standard_domain(opt.family, opt.dim)
                                                              : image_domain(w);
    SeminormCertificate cert = cone_seminorm_certify(transpose(product(w)), cone, opt.grid, opt.threads);
    CertificateRecord c;
    c.label = w.to_string();
    for (const auto& ray : cone.rays()) c.cone.push_back(ray_text(ray));
    c.resolution = cert.resolution;
    c.points = cert.points;
    c.violations = cert.violations;
    c.max_value = cert.max_value;
    c.worst = cert.worst.weights;
    c.verdict = std::string(to_string(cert.verdict));
    r.violations += c.violations;
    r.certificates.push_back(std::move(c));
  }
  return r;
}

int exit_code(const CertifyReport& r) { return r.violations == 0 ? kOk : kMismatch; }

LyapunovReport run_lyapunov(const LyapunovOptions& opt) {
  if (!valid_dimension(opt.family, opt.dim)) throw std::invalid_argument("invalid dimension for the family");
  LyapunovReport r;
  r.family = std::string(family_tag(opt.family));
  r.dim = opt.dim;
  r.seed = opt.seed;
  LyapunovEstimate est;
  if (opt.periodic) {
    const Word& w = *opt.periodic;
    if (w.family() != opt.family || w.dim() != opt.dim || w.empty()) {
      throw std::invalid_argument("periodic word must be nonempty and match the family");
    }
    r.stream = "periodic";
    r.word = w.to_string();
    est = opt.method == LyapunovMethod::periodic_exact ? periodic_lyapunov(w)
                                                        : lyapunov_estimate_periodic(w, opt.steps);
    r.hypothesis = is_primitive(product(w)).primitive;
  } else {
    if (opt.method == LyapunovMethod::periodic_exact) {
      throw std::invalid_argument("periodic_exact needs --periodic");
    }
    BernoulliSpec spec = uniform_bernoulli(opt.family, opt.dim, opt.seed);
    if (!opt.weights.empty()) {
      Rational total = 0;
      for (const auto& w : opt.weights) {
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
        total += w;
      }
      if (total == 0) throw std::invalid_argument("weights must not all be zero");
      spec.weights.clear();
      for (const auto& w : opt.weights) spec.weights.push_back(w / total);
    }
    r.stream = "bernoulli";
    r.weights = spec.weights;
    est = lyapunov_estimate(opt.family, opt.dim, spec, opt.steps, opt.trials, opt.method, opt.threads);
    r.hypothesis = supports_positive_cylinder(opt.family, opt.dim, spec);
    r.log_integrability = round12(log_integrability_value(opt.family, opt.dim, spec));
  }
  r.method = std::string(to_string(est.method));
  r.steps = est.steps;
  r.trials = est.trials;
  r.gamma1 = round12(est.gamma1);
  r.gamma2 = round12(est.gamma2);
  r.stderr1 = round12(est.stderr1);
  r.stderr2 = round12(est.stderr2);
  for (double g : est.spectrum) r.spectrum.push_back(round12(g));
  r.pisot_spectrum =
      r.hypothesis && r.gamma1 - kZ99 * r.stderr1 > 0 && r.gamma2 + kZ99 * r.stderr2 < 0;
  return r;
}

int exit_code(const LyapunovReport& r) { return r.pisot_spectrum ? kOk : kMismatch; }

OrbitReport run_orbit(const OrbitOptions& opt) {
  const OrbitTrace trace = orbit(opt.family, opt.start, opt.steps);
  OrbitReport r;
  r.family = std::string(family_tag(opt.family));
  r.start = trace.start;
  for (const auto& s : trace.steps) r.steps.push_back(OrbitRecord{s.letter, s.point});
  r.terminated = std::string(to_string(trace.terminated));
  return r;
}

int exit_code(const OrbitReport&) { return kOk; }

PisotCheckReport run_pisot_check(const ExactMatrix& m) {
  const PisotReport rep = pisot_check(m);
  PisotCheckReport r;
  r.dim = m.dim();
  for (int i = 0; i < m.dim(); ++i) {
    std::string row;
    for (int j = 0; j < m.dim(); ++j) {
      if (j) row += ' ';
      row += m(i, j).str();
    }
    r.matrix.push_back(std::move(row));
  }
  r.char_poly = rep.char_poly.to_string();
  r.primitive = is_primitive(m).primitive;
  r.is_pisot = rep.is_pisot;
  r.reason = std::string(to_string(rep.reason));
  r.counts = rep.counts;
  r.lambda1 = round12_outward(rep.lambda1);
  r.lambda2_modulus = round12_outward(rep.lambda2_modulus);
  return r;
}

int exit_code(const PisotCheckReport& r) { return r.is_pisot ? kOk : kMismatch; }

}  // namespace pisotlab::cli
