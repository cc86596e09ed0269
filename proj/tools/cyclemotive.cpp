// cyclemotive: command-line front end for the additive-invariant library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 unsupported measure or leaf, 4 internal cross-check mismatch.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cyclemotive/chow.hpp"
#include "cyclemotive/ffcount.hpp"
#include "cyclemotive/json_io.hpp"
#include "cyclemotive/motive.hpp"
#include "cyclemotive/toric.hpp"
#include "cyclemotive/verify.hpp"

namespace cm = cyclemotive;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kUnsupported = 3, kMismatch = 4 };

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep, std::size_t max_parts) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (parts.size() + 1 < max_parts) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) break;
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw cm::io::ParseError(std::string("bad ") + what + ": '" + s + "'");
  }
  return v;
}

// Output lines: a single line prints bare, several print as "label: text".
class Output {
 public:
  explicit Output(bool as_json) : as_json_(as_json) {}

  void add(const std::string& label, const std::string& text, json value) {
    lines_.emplace_back(label, text);
    doc_[label] = std::move(value);
  }
  void set(const std::string& key, json value) { doc_[key] = std::move(value); }

  void print() const {
    if (as_json_) {
      std::cout << doc_.dump(2) << "\n";
      return;
    }
    if (lines_.size() == 1) {
      std::cout << lines_.front().second << "\n";
      return;
    }
    for (const auto& [label, text] : lines_) std::cout << label << ": " << text << "\n";
  }

 private:
  bool as_json_;
  std::vector<std::pair<std::string, std::string>> lines_;
  json doc_ = json::object();
};

std::string join(const std::vector<cm::Integer>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s;
}

std::string describe(const cm::CongruenceReport& r) {
  std::ostringstream os;
  const auto qm1 = r.q - 1;
  if (r.actual) {
    os << "N=" << *r.actual;
    if (!r.count_source.empty()) os << " (" << r.count_source << ")";
    os << "; " << *r.actual << " mod " << r.q << " = " << cm::residue(*r.actual, r.q) << ", expected "
       << r.expected_mod_q << ": " << (*r.pass_mod_q ? "pass" : "FAIL");
    os << "; " << *r.actual << " mod " << qm1 << " = " << cm::residue(*r.actual, qm1) << ", expected "
       << r.expected_mod_qm1 << ": " << (*r.pass_mod_qm1 ? "pass" : "FAIL");
  } else {
    os << "expected " << r.expected_mod_q << " mod " << r.q << ", " << r.expected_mod_qm1 << " mod " << qm1;
  }
  os << "; " << r.status;
  return os.str();
}

int run_motive(const std::string& file, const std::string& measure_name, bool as_json) {
  const auto measure = cm::Measure::parse(measure_name);
  const std::filesystem::path path(file);
  const auto expr = cm::io::expr_from_json(cm::io::read_json_file(path), path.parent_path());
  const auto value = cm::eval_measure(expr, measure);
  if (as_json) {
    std::cout << json{{"measure", measure.name()}, {"result", cm::io::value_to_json(value)}}.dump(2) << "\n";
  } else {
    std::cout << cm::render(value) << "\n";
  }
  return kOk;
}

struct ChowArgs {
  std::uint32_t p = 0;
  std::optional<std::uint32_t> d;
  std::uint32_t n = 0;
  std::string method = "closed";
  bool method_given = false;
  std::optional<std::uint32_t> series;
  bool htilde = false;
  std::optional<std::string> congruence;
};

int run_chow(const ChowArgs& a, bool as_json) {
  if (a.p > a.n) throw cm::DomainError("need 0 <= p <= n");
  const bool needs_d = a.htilde || a.congruence || a.method_given || !a.series;
  if (needs_d && !a.d) throw cm::io::ParseError("-d is required for this request");

  Output out(as_json);
  out.set("p", a.p);
  out.set("n", a.n);
  if (a.d) out.set("d", *a.d);

  if (a.d && (a.method_given || (!a.series && !a.htilde && !a.congruence))) {
    const cm::ChowIndex idx{a.p, *a.d, a.n};
    cm::Integer value;
    if (a.method == "closed") {
      value = cm::chow_invariant_closed(idx);
    } else if (a.method == "recursive") {
      value = cm::chow_invariant_recursive(idx);
    } else {
      value = cm::chow_invariant_closed(idx);
      const auto rec = cm::chow_invariant_recursive(idx);
      if (rec != value) {
        throw Mismatch("closed form " + value.get_str() + " != recursion " + rec.get_str());
      }
    }
    out.set("method", a.method);
    out.add("value", value.get_str(), cm::io::integer_to_json(value));
  }
  if (a.series) {
    const auto coeffs = cm::chow_series(a.p, a.n, *a.series).univariate_coefficients();
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(cm::io::integer_to_json(c));
    out.add("series", join(coeffs), arr);
  }
  if (a.htilde) {
    const auto h = cm::chow_htilde({a.p, *a.d, a.n});
    out.add("h-tilde", h.to_string(), cm::io::value_to_json(h));
  }
  if (a.congruence) {
    const auto parts = split(*a.congruence, ',', 2);
    const auto q = parse_uint(parts[0], "q");
    const auto m = parts.size() > 1 ? parse_uint(parts[1], "m") : 1;
    const auto r = cm::chow_congruence_targets({a.p, *a.d, a.n}, q, static_cast<std::uint32_t>(m));
    out.add("congruence", describe(r), cm::io::congruence_to_json(r));
    out.print();
    return r.status == "failed" ? kVerifyFailed : kOk;
  }
  out.print();
  return kOk;
}

struct ToricArgs {
  std::string file;
  bool census = false;
  bool e_poly = false;
  bool lambda = false;
  std::optional<std::string> count;
  std::optional<std::string> euler_series;
};

int run_toric(const ToricArgs& a, bool as_json) {
  const auto fan = cm::io::fan_from_json(cm::io::read_json_file(a.file));
  const auto census = cm::fan_validate(fan);
  Output out(as_json);

  const bool any = a.e_poly || a.lambda || a.count || a.euler_series;
  if (a.census || !any) {
    std::string text;
    for (std::size_t i = 0; i < census.size(); ++i) text += (i ? "," : "") + std::to_string(census[i]);
    out.add("census", text, census);
  }
  if (a.lambda) {
    const auto l = cm::toric_lambda(fan);
    out.add("lambda", std::to_string(l), l);
  }
  if (a.e_poly) {
    const auto e = cm::toric_E_poly(fan);
    out.add("e-poly", e.to_string(), cm::io::value_to_json(e));
  }
  if (a.count) {
    const auto parts = split(*a.count, ',', 2);
    const auto q = parse_uint(parts[0], "q");
    cm::PrimePower::factor(q);
    const auto m = parts.size() > 1 ? parse_uint(parts[1], "m") : 1;
    const auto c = cm::toric_count(fan, cm::Integer(static_cast<unsigned long>(q)), static_cast<std::uint32_t>(m));
    out.add("count", c.get_str(), cm::io::integer_to_json(c));
  }
  if (a.euler_series) {
    const auto parts = split(*a.euler_series, ',', 3);
    if (parts.size() < 2) throw cm::io::ParseError("--euler-series expects p,D[,grading-file]");
    const auto p = static_cast<std::uint32_t>(parse_uint(parts[0], "p"));
    const auto order = static_cast<std::uint32_t>(parse_uint(parts[1], "D"));
    std::optional<cm::Grading> grading;
    if (parts.size() == 3) grading = cm::io::grading_from_json(cm::io::read_json_file(parts[2]));
    const auto s = cm::euler_series(fan, p, grading, order);
    out.add("euler-series", s.to_string(), cm::io::series_to_json(s));
  }
  out.print();
  return kOk;
}

int run_verify(const std::string& suite, bool as_json) {
  const auto names = suite == "all" ? cm::verify::suite_names() : std::vector<std::string>{suite};
  const auto results = cm::verify::run_suites(names);
  bool all = true;
  for (const auto& r : results) all = all && r.passed();
  if (as_json) {
    std::cout << cm::verify::report_to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
      if (!r.passed() && r.details.contains("first_failure")) std::cout << " " << r.details["first_failure"].dump();
      std::cout << "\n";
    }
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive invariants of variety classes and Chow varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit canonical JSON");

  auto* motive = app.add_subcommand("motive", "Evaluate an expression file under a measure");
  std::string expr_file;
  std::string measure = "e-poly";
  motive->add_option("file", expr_file, "Expression JSON file")->required();
  motive->add_option("--measure", measure, "e-poly | euler | h-tilde | h-bar | count-poly | count:q[,m]");

  auto* chow = app.add_subcommand("chow", "Invariants of the Chow variety C_{p,d}(P^n)");
  ChowArgs chow_args;
  chow->add_option("-p", chow_args.p, "Cycle dimension")->required();
  chow->add_option("-d", chow_args.d, "Degree");
  chow->add_option("-n", chow_args.n, "Ambient projective dimension")->required();
  auto* method_opt = chow->add_option("--method", chow_args.method, "closed | recursive | both")
                         ->check(CLI::IsMember({"closed", "recursive", "both"}));
  chow->add_option("--series", chow_args.series, "Generating series to order D");
  chow->add_flag("--htilde", chow_args.htilde, "Image in Z[u,u^-1]");
  chow->add_option("--congruence", chow_args.congruence, "q[,m]: counting congruences over F_{q^m}");

  auto* toric = app.add_subcommand("toric", "Fan census, invariants and Euler series");
  ToricArgs toric_args;
  toric->add_option("file", toric_args.file, "Fan JSON file")->required();
  toric->add_flag("--census", toric_args.census, "Cone counts by dimension");
  toric->add_flag("--e-poly", toric_args.e_poly, "E-polynomial from the orbit decomposition");
  toric->add_flag("--lambda", toric_args.lambda, "Number of top-dimensional cones");
  toric->add_option("--count", toric_args.count, "q[,m]: points over F_{q^m}");
  toric->add_option("--euler-series", toric_args.euler_series, "p,D[,grading-file]");

  auto* verify = app.add_subcommand("verify", "Run the built-in verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "Suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*motive) return run_motive(expr_file, measure, as_json);
    if (*chow) {
      chow_args.method_given = method_opt->count() > 0;
      return run_chow(chow_args, as_json);
    }
    if (*toric) return run_toric(toric_args, as_json);
    if (*verify) return run_verify(suite, as_json);
  } catch (const cm::NotCountable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const cm::Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Mismatch& e) {
    std::cerr << "cross-check mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    // Parse errors, invalid fans, domain violations and budget overruns.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
