#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace pisotlab;
using namespace pisotlab::cli;

namespace {

struct Common {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::json : csv ? Format::csv : Format::table; }
};

void add_format_flags(CLI::App* cmd, Common& common) {
  auto* j = cmd->add_flag("--json", common.json, "JSON output (schema_version 1)");
  auto* c = cmd->add_flag("--csv", common.csv, "CSV output");
  j->excludes(c);
}

// "FS:3:1,2,3", "1,2,3" or "123".
Word parse_word_arg(const std::string& text, Family family, int dim) {
  if (text.find(':') != std::string::npos) return Word::parse(text);
  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) letters.push_back(std::stoi(item));
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad word: " + text);
      letters.push_back(ch - '0');
    }
  }
  return Word(family, dim, std::move(letters));
}

template <class Report>
int emit(const Report& report, const Common& common) {
  std::cout << render(report, common.format());
  return exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pisot, semi-norm and Lyapunov checks for fully subtractive and Brun products"};
  app.require_subcommand(1);
  Common common;

  std::string family_text;
  int dim = 3;
  int threads = 0;

  auto* enumerate = app.add_subcommand("enumerate", "Check every word up to a length");
  EnumerateOptions eopt;
  enumerate->add_option("family", family_text, "FS or Brun")->required();
  enumerate->add_option("dim", dim, "Dimension (default 3)");
  enumerate->add_option("--max-len", eopt.max_len, "Longest word length")->required();
  enumerate->add_flag("--oracle", eopt.oracle, "Cross-check verdicts with a float eigensolver");
  enumerate->add_option("--cap", eopt.cap, "Refuse runs with more words than this");
  enumerate->add_option("--threads", threads, "Worker threads (PISOTLAB_THREADS)");
  add_format_flags(enumerate, common);

  auto* certify = app.add_subcommand("certify", "Semi-norm certificates on barycentric grids");
  CertifyOptions copt;
  std::vector<std::string> certify_words;
  certify->add_option("family", family_text, "FS or Brun")->required();
  certify->add_option("dim", dim, "Dimension (default 3)");
  certify->add_option("--grid", copt.grid, "Grid resolution N");
  certify->add_option("--word", certify_words, "Words to certify (default: every letter)");
  certify->add_option("--threads", threads, "Worker threads (PISOTLAB_THREADS)");
  add_format_flags(certify, common);

  auto* lyapunov = app.add_subcommand("lyapunov", "Lyapunov exponents of the cocycle");
  LyapunovOptions lopt;
  std::string weights_text, periodic_text, method_text = "exterior_power";
  lyapunov->add_option("family", family_text, "FS or Brun")->required();
  lyapunov->add_option("dim", dim, "Dimension (default 3)");
  lyapunov->add_option("--weights", weights_text, "Letter weights, e.g. 1,1,1 (default uniform)");
  lyapunov->add_option("--seed", lopt.seed, "Random seed");
  lyapunov->add_option("--steps", lopt.steps, "Steps per trial");
  lyapunov->add_option("--trials", lopt.trials, "Independent trials");
  lyapunov->add_option("--method", method_text, "exterior_power, seminorm_track or periodic_exact");
  lyapunov->add_option("--periodic", periodic_text, "Use the periodic stream of this word");
  lyapunov->add_option("--threads", threads, "Worker threads (PISOTLAB_THREADS)");
  add_format_flags(lyapunov, common);

  auto* orbit_cmd = app.add_subcommand("orbit", "Exact continued fraction orbit");
  OrbitOptions oopt;
  std::string point_text;
  orbit_cmd->add_option("family", family_text, "FS or Brun")->required();
  orbit_cmd->add_option("point", point_text, "Start point, e.g. 7,5,3")->required();
  orbit_cmd->add_option("--steps", oopt.steps, "Maximum number of steps");
  add_format_flags(orbit_cmd, common);

  auto* pisot = app.add_subcommand("pisot-check", "Pisot verdict for one matrix");
  std::string matrix_path, pisot_word;
  pisot->add_option("file", matrix_path, "Matrix text file (default stdin)");
  pisot->add_option("--word", pisot_word, "Check product(word) instead, e.g. FS:3:1,2,3");
  add_format_flags(pisot, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    threads = resolve_threads(threads);
    if (*enumerate) {
      eopt.family = parse_family(family_text);
      eopt.dim = dim;
      eopt.threads = threads;
      return emit(run_enumerate(eopt), common);
    }
    if (*certify) {
      copt.family = parse_family(family_text);
      copt.dim = dim;
      copt.threads = threads;
      for (const auto& w : certify_words) copt.words.push_back(parse_word_arg(w, copt.family, dim));
      return emit(run_certify(copt), common);
    }
    if (*lyapunov) {
      lopt.family = parse_family(family_text);
      lopt.dim = dim;
      lopt.threads = threads;
      lopt.method = parse_lyapunov_method(method_text);
      if (!weights_text.empty()) lopt.weights = parse_rational_vector(weights_text);
      if (!periodic_text.empty()) lopt.periodic = parse_word_arg(periodic_text, lopt.family, dim);
      return emit(run_lyapunov(lopt), common);
    }
    if (*orbit_cmd) {
      oopt.family = parse_family(family_text);
      oopt.start = parse_rational_vector(point_text);
      return emit(run_orbit(oopt), common);
    }
    if (*pisot) {
      ExactMatrix m(1);
      if (!pisot_word.empty()) {
        m = product(Word::parse(pisot_word));
      } else if (matrix_path.empty() || matrix_path == "-") {
        std::string text(std::istreambuf_iterator<char>(std::cin), {});
        m = parse_matrix(text);
      } else {
        std::ifstream in(matrix_path);
        if (!in) throw std::invalid_argument("cannot read " + matrix_path);
        std::string text(std::istreambuf_iterator<char>(in), {});
        m = parse_matrix(text);
      }
      return emit(run_pisot_check(m), common);
    }
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
