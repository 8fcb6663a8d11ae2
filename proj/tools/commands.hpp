#pragma once

// The five CLI verbs as library calls. Each returns a report; exit codes
// and rendering live here too so tests can run a verb without a process.

#include "report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisotlab::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kResourceCap = 3 };

enum class Format { table, json, csv };

/// Thrown when a run would exceed the configured word cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultWordCap = 1'000'000;

/// --threads if positive, else PISOTLAB_THREADS, else the hardware count.
int resolve_threads(int requested);

struct EnumerateOptions {
  Family family = Family::FullySubtractive;
  int dim = 3;
  int max_len = 1;
  bool oracle = false;
  std::uint64_t cap = kDefaultWordCap;
  int threads = 1;
};

EnumerateReport run_enumerate(const EnumerateOptions& opt);
int exit_code(const EnumerateReport& r);

struct CertifyOptions {
  Family family = Family::FullySubtractive;
  int dim = 3;
  int grid = kDefaultGridResolution;
  /// Empty: every letter.
  std::vector<Word> words;
  int threads = 1;
};

CertifyReport run_certify(const CertifyOptions& opt);
int exit_code(const CertifyReport& r);

struct LyapunovOptions {
  Family family = Family::Brun;
  int dim = 3;
  /// Empty: uniform. Normalized to sum one.
  RatVector weights;
  std::uint64_t seed = 0;
  long long steps = 1'000'000;
  int trials = 20;
  LyapunovMethod method = LyapunovMethod::exterior_power;
  /// Periodic stream instead of Bernoulli letters.
  std::optional<Word> periodic;
  int threads = 1;
};

LyapunovReport run_lyapunov(const LyapunovOptions& opt);
int exit_code(const LyapunovReport& r);

struct OrbitOptions {
  Family family = Family::Brun;
  RatVector start;
  int steps = 10;
};

OrbitReport run_orbit(const OrbitOptions& opt);
int exit_code(const OrbitReport& r);

PisotCheckReport run_pisot_check(const ExactMatrix& m);
int exit_code(const PisotCheckReport& r);

template <class Report>
std::string render(const Report& r, Format format) {
  switch (format) {
    case Format::json:
      return to_json(r);
    case Format::csv:
      return to_csv(r);
    default:
      return to_table(r);
  }
}

/// Float eigensolver cross-check of a Pisot verdict; nullopt when some
/// eigenvalue modulus is too close to one to decide.
std::optional<bool> oracle_is_pisot(const ExactMatrix& m);

}  // namespace pisotlab::cli
