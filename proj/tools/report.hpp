#pragma once

// Report records produced by the CLI verbs, their JSON (schema_version 1),
// CSV and table renderings. Floats are rounded to 12 significant digits
// when a report is built, so JSON output parses back to an equal report.

#include "pisotlab/charpoly.hpp"
#include "pisotlab/dynamics.hpp"
#include "pisotlab/seminorm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pisotlab::cli {

inline constexpr int kSchemaVersion = 1;

/// Nearest double with 12 significant digits.
double round12(double x);
/// [lo, hi] widened to the 12-digit grid.
Interval round12_outward(const Interval& i);

struct WordRecord {
  std::string word;
  bool primitive = false;
  bool primitive_expected = false;
  bool pisot = false;
  std::string reason;
  Interval lambda1;
  Interval lambda2_modulus;
  /// Exact semi-norm bound on |lambda2|; primitive words only.
  std::optional<Rational> lambda2_seminorm_bound;
  /// FS primitive words only.
  std::optional<double> dobrushin_bound;
  std::optional<bool> localized;
  /// Set only with --oracle; empty when the float solver is inconclusive.
  std::optional<bool> oracle_agrees;
  friend bool operator==(const WordRecord&, const WordRecord&) = default;
};

struct EnumerateSummary {
  std::uint64_t words_checked = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t bound_failures = 0;
  std::uint64_t localization_failures = 0;
  std::uint64_t oracle_disagreements = 0;
  friend bool operator==(const EnumerateSummary&, const EnumerateSummary&) = default;
};

struct EnumerateReport {
  std::string family;
  int dim = 0;
  int max_len = 0;
  bool oracle = false;
  std::vector<WordRecord> records;
  EnumerateSummary summary;
  friend bool operator==(const EnumerateReport&, const EnumerateReport&) = default;
};

struct CertificateRecord {
  std::string label;
  /// Rays of the sampled cone as integer vectors.
  std::vector<std::string> cone;
  int resolution = 0;
  std::uint64_t points = 0;
  std::uint64_t violations = 0;
  Rational max_value;
  RatVector worst;
  std::string verdict;
  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct CertifyReport {
  std::string family;
  int dim = 0;
  int grid = 0;
  /// Always "grid": the cone supremum is sampled, not proven.
  std::string coverage = "grid";
  std::vector<CertificateRecord> certificates;
  std::uint64_t violations = 0;
  friend bool operator==(const CertifyReport&, const CertifyReport&) = default;
};

struct LyapunovReport {
  std::string family;
  int dim = 0;
  /// "bernoulli" or "periodic".
  std::string stream;
  RatVector weights;
  std::uint64_t seed = 0;
  std::string word;
  double gamma1 = 0;
  double gamma2 = 0;
  double stderr1 = 0;
  double stderr2 = 0;
  long long steps = 0;
  int trials = 0;
  std::string method;
  std::vector<double> spectrum;
  std::optional<double> log_integrability;
  /// Positive cylinder (Bernoulli) or primitive word (periodic).
  bool hypothesis = false;
  bool pisot_spectrum = false;
  friend bool operator==(const LyapunovReport&, const LyapunovReport&) = default;
};

struct OrbitRecord {
  int letter = 0;
  RatVector point;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct OrbitReport {
  std::string family;
  RatVector start;
  std::vector<OrbitRecord> steps;
  std::string terminated;
  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

struct PisotCheckReport {
  int dim = 0;
  std::vector<std::string> matrix;
  std::string char_poly;
  bool primitive = false;
  bool is_pisot = false;
  std::string reason;
  RootCounts counts;
  Interval lambda1;
  Interval lambda2_modulus;
  friend bool operator==(const PisotCheckReport&, const PisotCheckReport&) = default;
};

std::string to_json(const EnumerateReport& r);
std::string to_json(const CertifyReport& r);
std::string to_json(const LyapunovReport& r);
std::string to_json(const OrbitReport& r);
std::string to_json(const PisotCheckReport& r);

EnumerateReport enumerate_report_from_json(const std::string& text);
CertifyReport certify_report_from_json(const std::string& text);
LyapunovReport lyapunov_report_from_json(const std::string& text);
OrbitReport orbit_report_from_json(const std::string& text);
PisotCheckReport pisot_check_report_from_json(const std::string& text);

std::string to_csv(const EnumerateReport& r);
std::string to_csv(const CertifyReport& r);
std::string to_csv(const LyapunovReport& r);
std::string to_csv(const OrbitReport& r);
std::string to_csv(const PisotCheckReport& r);

std::string to_table(const EnumerateReport& r);
std::string to_table(const CertifyReport& r);
std::string to_table(const LyapunovReport& r);
std::string to_table(const OrbitReport& r);
std::string to_table(const PisotCheckReport& r);

}  // namespace pisotlab::cli
