#include "report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace pisotlab::cli {

using Json = nlohmann::ordered_json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

double grid_step(double x) {
  if (x == 0) return 1e-300;
  return std::pow(10.0, std::floor(std::log10(std::abs(x))) - 11);
}

}  // namespace

Interval round12_outward(const Interval& i) {
  Interval out{round12(i.lo), round12(i.hi)};
  if (out.lo > i.lo) out.lo = round12(out.lo - grid_step(i.lo));
  if (out.hi < i.hi) out.hi = round12(out.hi + grid_step(i.hi));
  return out;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

RatVector vector_from(const Json& j) {
  RatVector v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

Json interval_json(const Interval& i) { return Json{{"lo", i.lo}, {"hi", i.hi}}; }

Interval interval_from(const Json& j) { return Interval{j.at("lo").get<double>(), j.at("hi").get<double>()}; }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Json envelope(std::string_view command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

Json parse_checked(const std::string& text, std::string_view command) {
  Json j = Json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version");
  }
  if (j.at("command").get<std::string>() != command) {
    throw std::invalid_argument("report is not a " + std::string(command) + " report");
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string interval_text(const Interval& i) { return "[" + fmt(i.lo) + ", " + fmt(i.hi) + "]"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

// enumerate

std::string to_json(const EnumerateReport& r) {
  Json j = envelope("enumerate");
  j["family"] = r.family;
  j["dim"] = r.dim;
  j["max_len"] = r.max_len;
  j["oracle"] = r.oracle;
  Json records = Json::array();
  for (const auto& w : r.records) {
    Json rec;
    rec["word"] = w.word;
    rec["primitive"] = w.primitive;
    rec["primitive_expected"] = w.primitive_expected;
    rec["pisot"] = w.pisot;
    rec["reason"] = w.reason;
    rec["lambda1"] = interval_json(w.lambda1);
    rec["lambda2_modulus"] = interval_json(w.lambda2_modulus);
    rec["lambda2_seminorm_bound"] =
        w.lambda2_seminorm_bound ? rational_json(*w.lambda2_seminorm_bound) : Json(nullptr);
    rec["dobrushin_bound"] = optional_json(w.dobrushin_bound);
    rec["localized"] = optional_json(w.localized);
    rec["oracle_agrees"] = optional_json(w.oracle_agrees);
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["summary"] = Json{{"words_checked", r.summary.words_checked},
                      {"mismatches", r.summary.mismatches},
                      {"bound_failures", r.summary.bound_failures},
                      {"localization_failures", r.summary.localization_failures},
                      {"oracle_disagreements", r.summary.oracle_disagreements}};
  return dump(j);
}

EnumerateReport enumerate_report_from_json(const std::string& text) {
  const Json j = parse_checked(text, "enumerate");
  EnumerateReport r;
  r.family = j.at("family").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.max_len = j.at("max_len").get<int>();
  r.oracle = j.at("oracle").get<bool>();
  for (const auto& rec : j.at("records")) {
    WordRecord w;
    w.word = rec.at("word").get<std::string>();
    w.primitive = rec.at("primitive").get<bool>();
    w.primitive_expected = rec.at("primitive_expected").get<bool>();
    w.pisot = rec.at("pisot").get<bool>();
    w.reason = rec.at("reason").get<std::string>();
    w.lambda1 = interval_from(rec.at("lambda1"));
    w.lambda2_modulus = interval_from(rec.at("lambda2_modulus"));
    if (!rec.at("lambda2_seminorm_bound").is_null()) {
      w.lambda2_seminorm_bound = parse_rational(rec.at("lambda2_seminorm_bound").get<std::string>());
    }
    w.dobrushin_bound = optional_from<double>(rec.at("dobrushin_bound"));
    w.localized = optional_from<bool>(rec.at("localized"));
    w.oracle_agrees = optional_from<bool>(rec.at("oracle_agrees"));
    r.records.push_back(std::move(w));
  }
  const Json& s = j.at("summary");
  r.summary.words_checked = s.at("words_checked").get<std::uint64_t>();
  r.summary.mismatches = s.at("mismatches").get<std::uint64_t>();
  r.summary.bound_failures = s.at("bound_failures").get<std::uint64_t>();
  r.summary.localization_failures = s.at("localization_failures").get<std::uint64_t>();
  r.summary.oracle_disagreements = s.at("oracle_disagreements").get<std::uint64_t>();
  return r;
}

std::string to_csv(const EnumerateReport& r) {
  std::ostringstream os;
  os << "word,primitive,primitive_expected,pisot,reason,lambda1_lo,lambda1_hi,lambda2_lo,lambda2_hi,"
        "lambda2_seminorm_bound,dobrushin_bound,localized,oracle_agrees\n";
  auto opt_bool = [](const std::optional<bool>& b) { return b ? std::string(*b ? "1" : "0") : ""; };
  for (const auto& w : r.records) {
    os << '"' << w.word << "\"," << w.primitive << ',' << w.primitive_expected << ',' << w.pisot << ','
       << w.reason << ',' << fmt(w.lambda1.lo) << ',' << fmt(w.lambda1.hi) << ','
       << fmt(w.lambda2_modulus.lo) << ',' << fmt(w.lambda2_modulus.hi) << ','
       << (w.lambda2_seminorm_bound ? to_string(*w.lambda2_seminorm_bound) : "") << ','
       << (w.dobrushin_bound ? fmt(*w.dobrushin_bound) : "") << ',' << opt_bool(w.localized) << ','
       << opt_bool(w.oracle_agrees) << '\n';
  }
  return os.str();
}

std::string to_table(const EnumerateReport& r) {
  std::ostringstream os;
  os << "enumerate " << r.family << " d=" << r.dim << " max-len " << r.max_len << "\n";
  std::size_t width = 6;
  for (const auto& w : r.records) width = std::max(width, w.word.size() + 2);
  os << pad("word", width) << pad("prim", 6) << pad("pisot", 7) << pad("reason", 24) << pad("lambda1", 16)
     << pad("|lambda2|", 16) << "bound\n";
  for (const auto& w : r.records) {
    std::string bound = w.lambda2_seminorm_bound ? fmt(to_double(*w.lambda2_seminorm_bound)) : "-";
    os << pad(w.word, width) << pad(yes_no(w.primitive), 6) << pad(yes_no(w.pisot), 7) << pad(w.reason, 24)
       << pad(fmt(w.lambda1.mid()), 16) << pad(fmt(w.lambda2_modulus.mid()), 16) << bound << "\n";
  }
  os << "words checked: " << r.summary.words_checked << "\n"
     << "mismatches: " << r.summary.mismatches << "\n"
     << "bound failures: " << r.summary.bound_failures << "\n"
     << "localization failures: " << r.summary.localization_failures << "\n";
  if (r.oracle) os << "oracle disagreements: " << r.summary.oracle_disagreements << "\n";
  return os.str();
}

// certify

std::string to_json(const CertifyReport& r) {
  Json j = envelope("certify");
  j["family"] = r.family;
  j["dim"] = r.dim;
  j["grid"] = r.grid;
  j["coverage"] = r.coverage;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    certs.push_back(Json{{"label", c.label},
                         {"cone", c.cone},
                         {"resolution", c.resolution},
                         {"points", c.points},
                         {"violations", c.violations},
                         {"max_value", rational_json(c.max_value)},
                         {"worst", vector_json(c.worst)},
                         {"verdict", c.verdict}});
  }
  j["certificates"] = std::move(certs);
  j["violations"] = r.violations;
  return dump(j);
}

CertifyReport certify_report_from_json(const std::string& text) {
  const Json j = parse_checked(text, "certify");
  CertifyReport r;
  r.family = j.at("family").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.grid = j.at("grid").get<int>();
  r.coverage = j.at("coverage").get<std::string>();
  for (const auto& c : j.at("certificates")) {
    CertificateRecord rec;
    rec.label = c.at("label").get<std::string>();
    rec.cone = c.at("cone").get<std::vector<std::string>>();
    rec.resolution = c.at("resolution").get<int>();
    rec.points = c.at("points").get<std::uint64_t>();
    rec.violations = c.at("violations").get<std::uint64_t>();
    rec.max_value = parse_rational(c.at("max_value").get<std::string>());
    rec.worst = vector_from(c.at("worst"));
    rec.verdict = c.at("verdict").get<std::string>();
    r.certificates.push_back(std::move(rec));
  }
  r.violations = j.at("violations").get<std::uint64_t>();
  return r;
}

std::string to_csv(const CertifyReport& r) {
  std::ostringstream os;
  os << "label,resolution,points,violations,max_value,worst,verdict\n";
  for (const auto& c : r.certificates) {
    os << '"' << c.label << "\"," << c.resolution << ',' << c.points << ',' << c.violations << ','
       << to_string(c.max_value) << ",\"" << format_rational_vector(c.worst) << "\"," << c.verdict << '\n';
  }
  return os.str();
}

std::string to_table(const CertifyReport& r) {
  std::ostringstream os;
  os << "certify " << r.family << " d=" << r.dim << " grid " << r.grid << " (sampled at grid points)\n";
  std::size_t width = 7;
  for (const auto& c : r.certificates) width = std::max(width, c.label.size() + 2);
  os << pad("label", width) << pad("points", 8) << pad("max", 12) << pad("worst mu", 22) << "verdict\n";
  for (const auto& c : r.certificates) {
    os << pad(c.label, width) << pad(std::to_string(c.points), 8) << pad(to_string(c.max_value), 12)
       << pad(format_rational_vector(c.worst), 22) << c.verdict << "\n";
  }
  os << "violations: " << r.violations << "\n";
  return os.str();
}

// lyapunov

std::string to_json(const LyapunovReport& r) {
  Json j = envelope("lyapunov");
  j["family"] = r.family;
  j["dim"] = r.dim;
  j["stream"] = r.stream;
  j["weights"] = vector_json(r.weights);
  j["seed"] = r.seed;
  j["word"] = r.word;
  j["method"] = r.method;
  j["steps"] = r.steps;
  j["trials"] = r.trials;
  j["gamma1"] = r.gamma1;
  j["gamma2"] = r.gamma2;
  j["stderr1"] = r.stderr1;
  j["stderr2"] = r.stderr2;
  j["spectrum"] = r.spectrum;
  j["log_integrability"] = optional_json(r.log_integrability);
  j["hypothesis"] = r.hypothesis;
  j["pisot_spectrum"] = r.pisot_spectrum;
  return dump(j);
}

LyapunovReport lyapunov_report_from_json(const std::string& text) {
  const Json j = parse_checked(text, "lyapunov");
  LyapunovReport r;
  r.family = j.at("family").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.stream = j.at("stream").get<std::string>();
  r.weights = vector_from(j.at("weights"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.word = j.at("word").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.steps = j.at("steps").get<long long>();
  r.trials = j.at("trials").get<int>();
  r.gamma1 = j.at("gamma1").get<double>();
  r.gamma2 = j.at("gamma2").get<double>();
  r.stderr1 = j.at("stderr1").get<double>();
  r.stderr2 = j.at("stderr2").get<double>();
  r.spectrum = j.at("spectrum").get<std::vector<double>>();
  r.log_integrability = optional_from<double>(j.at("log_integrability"));
  r.hypothesis = j.at("hypothesis").get<bool>();
  r.pisot_spectrum = j.at("pisot_spectrum").get<bool>();
  return r;
}

std::string to_csv(const LyapunovReport& r) {
  std::ostringstream os;
  os << "family,dim,stream,method,steps,trials,gamma1,stderr1,gamma2,stderr2,hypothesis,pisot_spectrum\n";
  os << r.family << ',' << r.dim << ',' << r.stream << ',' << r.method << ',' << r.steps << ',' << r.trials << ','
     << fmt(r.gamma1) << ',' << fmt(r.stderr1) << ',' << fmt(r.gamma2) << ',' << fmt(r.stderr2) << ','
     << r.hypothesis << ',' << r.pisot_spectrum << '\n';
  return os.str();
}

std::string to_table(const LyapunovReport& r) {
  std::ostringstream os;
  os << "lyapunov " << r.family << " d=" << r.dim << " (" << r.stream;
  if (r.stream == "periodic") {
    os << " " << r.word;
  } else {
    os << " weights " << format_rational_vector(r.weights) << " seed " << r.seed;
  }
  os << ")\n";
  os << "method: " << r.method << ", steps " << r.steps << ", trials " << r.trials << "\n";
  os << "gamma1 = " << fmt(r.gamma1) << " +- " << fmt(r.stderr1) << "\n";
  os << "gamma2 = " << fmt(r.gamma2) << " +- " << fmt(r.stderr2) << "\n";
  if (!r.spectrum.empty()) {
    os << "spectrum:";
    for (double g : r.spectrum) os << " " << fmt(g);
    os << "\n";
  }
  if (r.log_integrability) os << "log-integrability: " << fmt(*r.log_integrability) << "\n";
  os << "hypothesis: " << yes_no(r.hypothesis) << "\n";
  os << "pisot spectrum (99%): " << yes_no(r.pisot_spectrum) << "\n";
  return os.str();
}

// orbit

std::string to_json(const OrbitReport& r) {
  Json j = envelope("orbit");
  j["family"] = r.family;
  j["start"] = vector_json(r.start);
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(Json{{"letter", s.letter}, {"point", vector_json(s.point)}});
  j["steps"] = std::move(steps);
  j["terminated"] = r.terminated;
  return dump(j);
}

OrbitReport orbit_report_from_json(const std::string& text) {
  const Json j = parse_checked(text, "orbit");
  OrbitReport r;
  r.family = j.at("family").get<std::string>();
  r.start = vector_from(j.at("start"));
  for (const auto& s : j.at("steps")) {
    r.steps.push_back(OrbitRecord{s.at("letter").get<int>(), vector_from(s.at("point"))});
  }
  r.terminated = j.at("terminated").get<std::string>();
  return r;
}

std::string to_csv(const OrbitReport& r) {
  std::ostringstream os;
  os << "step,letter,point\n";
  os << "0,,\"" << format_rational_vector(r.start) << "\"\n";
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    os << k + 1 << ',' << r.steps[k].letter << ",\"" << format_rational_vector(r.steps[k].point) << "\"\n";
  }
  return os.str();
}

std::string to_table(const OrbitReport& r) {
  std::ostringstream os;
  os << "orbit " << r.family << " from (" << format_rational_vector(r.start) << ")\n";
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    os << pad(std::to_string(k + 1), 6) << pad(std::to_string(r.steps[k].letter), 4) << "("
       << format_rational_vector(r.steps[k].point) << ")\n";
  }
  os << "terminated: " << r.terminated << "\n";
  return os.str();
}

// pisot-check

std::string to_json(const PisotCheckReport& r) {
  Json j = envelope("pisot-check");
  j["dim"] = r.dim;
  j["matrix"] = r.matrix;
  j["char_poly"] = r.char_poly;
  j["primitive"] = r.primitive;
  j["is_pisot"] = r.is_pisot;
  j["reason"] = r.reason;
  j["counts"] = Json{{"inside", r.counts.inside}, {"on_circle", r.counts.on_circle}, {"outside", r.counts.outside}};
  j["lambda1"] = interval_json(r.lambda1);
  j["lambda2_modulus"] = interval_json(r.lambda2_modulus);
  return dump(j);
}

PisotCheckReport pisot_check_report_from_json(const std::string& text) {
  const Json j = parse_checked(text, "pisot-check");
  PisotCheckReport r;
  r.dim = j.at("dim").get<int>();
  r.matrix = j.at("matrix").get<std::vector<std::string>>();
  r.char_poly = j.at("char_poly").get<std::string>();
  r.primitive = j.at("primitive").get<bool>();
  r.is_pisot = j.at("is_pisot").get<bool>();
  r.reason = j.at("reason").get<std::string>();
  const Json& c = j.at("counts");
  r.counts = RootCounts{c.at("inside").get<int>(), c.at("on_circle").get<int>(), c.at("outside").get<int>()};
  r.lambda1 = interval_from(j.at("lambda1"));
  r.lambda2_modulus = interval_from(j.at("lambda2_modulus"));
  return r;
}

std::string to_csv(const PisotCheckReport& r) {
  std::ostringstream os;
  os << "char_poly,primitive,is_pisot,reason,inside,on_circle,outside,lambda1_lo,lambda1_hi,lambda2_lo,lambda2_hi\n";
  os << '"' << r.char_poly << "\"," << r.primitive << ',' << r.is_pisot << ',' << r.reason << ','
     << r.counts.inside << ',' << r.counts.on_circle << ',' << r.counts.outside << ',' << fmt(r.lambda1.lo) << ','
     << fmt(r.lambda1.hi) << ',' << fmt(r.lambda2_modulus.lo) << ',' << fmt(r.lambda2_modulus.hi) << '\n';
  return os.str();
}

std::string to_table(const PisotCheckReport& r) {
  std::ostringstream os;
  os << "characteristic polynomial: " << r.char_poly << "\n";
  os << "roots inside / on / outside the unit circle: " << r.counts.inside << " / " << r.counts.on_circle
     << " / " << r.counts.outside << "\n";
  os << "lambda1 in " << interval_text(r.lambda1) << "\n";
  os << "|lambda2| in " << interval_text(r.lambda2_modulus) << "\n";
  os << "primitive: " << yes_no(r.primitive) << "\n";
  os << "pisot: " << yes_no(r.is_pisot) << " (" << r.reason << ")\n";
  return os.str();
}

}  // namespace pisotlab::cli
