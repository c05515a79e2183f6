#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "threecore/cm_formula.hpp"
#include "threecore/hook_sum.hpp"
#include "threecore/io.hpp"
#include "threecore/partition.hpp"
#include "threecore/series.hpp"
#include "threecore/verify.hpp"

namespace {

using namespace threecore;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr int kHardPrecisionCap = 1000000;

struct Options {
  // coeff / vanish
  std::string kind = "a";
  std::uint64_t n = 0;
  std::string route = "all";
  // shared limits
  std::int64_t limit = -1;      // route/suite main limit
  std::int64_t precision = -1;  // series precision
  // verify
  std::string suite = "all";
  // density
  std::vector<std::uint64_t> bounds = {100, 1000, 10000, 100000};
  // series
  std::string series_kind = "F";
  std::optional<std::int64_t> param;
  // emission
  std::string format = "text";
  std::string output;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
  out << text;
}

// ---------------------------------------------------------------- coeff --

struct RouteValue {
  std::string route;
  bool computed = false;
  std::string value;
  std::string note;
};

RouteValue coeff_formula(const std::string& kind, std::uint64_t n) {
  RouteValue rv{"formula", true, "", ""};
  if (kind == "a")
    rv.value = a_coeff(n).to_string();
  else if (kind == "b")
    rv.value = b_coeff(n).to_string();
  else if (kind == "a_star")
    rv.value = a_star(n).to_string();
  else
    rv.value = b_star(n).to_string();
  return rv;
}

RouteValue coeff_series(const std::string& kind, std::uint64_t n,
                        std::int64_t budget) {
  RouteValue rv{"series", false, "", ""};
  // a/b are indexed by x-power; the starred kinds by q-power
  const bool starred = kind == "a_star" || kind == "b_star";
  std::uint64_t x_index = n;
  if (starred) {
    if (n == 0) throw std::invalid_argument("series route: index must be >= 1");
    if (n % 3 != 1) {
      rv.computed = true;
      rv.value = "0";
      rv.note = "index not 1 (mod 3)";
      return rv;
    }
    x_index = (n - 1) / 3;
  }
  if (x_index > static_cast<std::uint64_t>(budget) ||
      x_index > static_cast<std::uint64_t>(kHardPrecisionCap)) {
    rv.note = "exceeds series precision " + std::to_string(budget);
    return rv;
  }
  const int N = static_cast<int>(x_index);
  const bool is_a = kind == "a" || kind == "a_star";
  const IntSeries s = is_a ? euler_power(8, N) : tcore_series(3, N);
  rv.computed = true;
  rv.value = s[N].to_string();
  return rv;
}

RouteValue coeff_bruteforce(const std::string& kind, std::uint64_t n,
                            std::int64_t limit) {
  RouteValue rv{"bruteforce", false, "", ""};
  const bool starred = kind == "a_star" || kind == "b_star";
  std::uint64_t x_index = n;
  if (starred) {
    if (n == 0)
      throw std::invalid_argument("bruteforce route: index must be >= 1");
    if (n % 3 != 1) {
      rv.computed = true;
      rv.value = "0";
      rv.note = "index not 1 (mod 3)";
      return rv;
    }
    x_index = (n - 1) / 3;
  }
  if (x_index > static_cast<std::uint64_t>(limit)) {
    rv.note = "exceeds bruteforce limit " + std::to_string(limit);
    return rv;
  }
  const int m = static_cast<int>(x_index);
  rv.computed = true;
  if (kind == "a" || kind == "a_star") {
    const Rational sum = hook_sum_coefficient(9, m);
    if (!sum.is_integer())
      throw std::logic_error("hook sum produced a non-integer coefficient");
    rv.value = sum.num().to_string();
  } else {
    rv.value = Int(count_t_cores(m, 3)).to_string();
  }
  return rv;
}

int run_coeff(const Options& opt) {
  const std::int64_t brute_limit = opt.limit < 0 ? 50 : opt.limit;
  const std::int64_t series_budget = opt.precision < 0 ? 10000 : opt.precision;

  std::vector<RouteValue> values;
  if (opt.route == "formula" || opt.route == "all")
    values.push_back(coeff_formula(opt.kind, opt.n));
  if (opt.route == "series" || opt.route == "all") {
    RouteValue rv = coeff_series(opt.kind, opt.n, series_budget);
    if (!rv.computed && opt.route == "series")
      throw std::invalid_argument("series route: " + rv.note);
    values.push_back(std::move(rv));
  }
  if (opt.route == "bruteforce" || opt.route == "all") {
    RouteValue rv = coeff_bruteforce(opt.kind, opt.n, brute_limit);
    if (!rv.computed && opt.route == "bruteforce")
      throw std::invalid_argument("bruteforce route: " + rv.note);
    values.push_back(std::move(rv));
  }

  std::string text = opt.kind + "(" + std::to_string(opt.n) + "):\n";
  std::string agreed_value;
  bool agree = true;
  int computed = 0;
  for (const RouteValue& rv : values) {
    text += "  " + rv.route + std::string(11 - rv.route.size(), ' ');
    if (rv.computed) {
      text += "= " + rv.value;
      if (!rv.note.empty()) text += "  (" + rv.note + ")";
      if (computed == 0)
        agreed_value = rv.value;
      else if (rv.value != agreed_value)
        agree = false;
      ++computed;
    } else {
      text += "skipped (" + rv.note + ")";
    }
    text += "\n";
  }
  if (opt.route == "all")
    text += agree ? "agreement: yes\n" : "agreement: NO\n";
  emit(opt, text);
  return agree ? kExitPass : kExitMismatch;
}

// --------------------------------------------------------------- vanish --

int run_vanish(const Options& opt) {
  const VanishCertificate cert = vanishes(opt.n);
  const Factorization f = factorize(cert.shifted);
  std::string text = "n = " + std::to_string(opt.n) + ": ";
  text += cert.vanishes ? "vanishes (a(n) = b(n) = 0)\n"
                        : "does not vanish (a(n), b(n) nonzero)\n";
  text += "3n+1 = " + std::to_string(cert.shifted) + " = " + to_string(f) + "\n";
  if (cert.vanishes) {
    text += "primes p == 2 (mod 3) with odd order:";
    for (std::uint64_t p : cert.certifying) text += " " + std::to_string(p);
    text += "\ncertificate: smallest such p = " + std::to_string(cert.witness) + "\n";
  } else {
    text += "no prime p == 2 (mod 3) divides it to an odd power\n";
  }
  emit(opt, text);
  return kExitPass;
}

// --------------------------------------------------------------- verify --

int run_verify(const Options& opt) {
  std::vector<std::string> suites;
  if (opt.suite == "all")
    suites = {"jacobi", "no-formula", "three-core", "theorem1", "theta",
              "counterexample-t4"};
  else
    suites = {opt.suite};

  const bool text_mode = opt.format == "text";
  MismatchSink sink;
  std::string current;
  if (text_mode && opt.output.empty()) {
    sink = [&current](const Mismatch& m) {
      std::cout << "[" << current << "] mismatch at " << m.index << " (" << m.what
                << "): " << m.left << " vs " << m.right << "\n";
    };
  }

  std::vector<VerificationReport> reports;
  for (const std::string& suite : suites) {
    current = suite;
    if (suite == "jacobi") {
      reports.push_back(
          verify_jacobi(opt.limit < 0 ? 2000 : static_cast<int>(opt.limit), sink));
    } else if (suite == "no-formula") {
      reports.push_back(verify_hook_formula(
          opt.limit < 0 ? 40 : static_cast<int>(opt.limit), {1, 2, 3, 4, 9, 16},
          sink));
    } else if (suite == "three-core") {
      reports.push_back(verify_three_core(
          50, opt.precision < 0 ? 10000 : static_cast<int>(opt.precision),
          opt.limit < 0 ? 100000 : static_cast<std::uint64_t>(opt.limit), sink));
    } else if (suite == "theorem1") {
      reports.push_back(verify_theorem1(
          opt.limit < 0 ? 100000 : static_cast<std::uint64_t>(opt.limit),
          opt.precision < 0 ? 10000 : static_cast<int>(opt.precision), sink));
    } else if (suite == "theta") {
      reports.push_back(
          verify_theta(opt.limit < 0 ? 2000 : static_cast<int>(opt.limit), sink));
    } else if (suite == "counterexample-t4") {
      reports.push_back(verify_counterexample_t4(sink));
    } else {
      throw CLI::ValidationError("unknown suite: " + opt.suite);
    }
    if (text_mode && opt.output.empty()) {
      const VerificationReport& r = reports.back();
      std::cout << "[" << suite << "] " << (r.passed ? "pass" : "FAIL") << ": "
                << r.mismatches.size() << " mismatches in " << r.elapsed_seconds
                << "s (";
      for (std::size_t i = 0; i < r.ranges.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << r.ranges[i].first << "=" << r.ranges[i].second;
      }
      std::cout << ")\n";
    }
  }

  bool all_passed = true;
  for (const VerificationReport& r : reports) all_passed &= r.passed;

  if (!text_mode) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
    emit(opt, arr.dump() + "\n");
  } else if (!opt.output.empty()) {
    std::string text;
    for (const VerificationReport& r : reports) {
      text += "[" + r.campaign + "] " + (r.passed ? "pass" : "FAIL") + ": " +
              std::to_string(r.mismatches.size()) + " mismatches\n";
      for (const Mismatch& m : r.mismatches)
        text += "  at " + std::to_string(m.index) + " (" + m.what + "): " +
                m.left + " vs " + m.right + "\n";
    }
    emit(opt, text);
  }
  return all_passed ? kExitPass : kExitMismatch;
}

// -------------------------------------------------------------- density --

int run_density(const Options& opt) {
  for (std::uint64_t b : opt.bounds) {
    if (b > 3000000)
      throw std::invalid_argument("density: bound exceeds sieve range 3e6");
  }
  const std::vector<DensityRow> rows = density_table(opt.bounds);
  if (opt.format == "json") {
    emit(opt, density_to_json(rows).dump() + "\n");
  } else if (opt.format == "csv") {
    emit(opt, density_to_csv(rows));
  } else {
    std::string text;
    for (const DensityRow& row : rows) {
      text += "X = " + std::to_string(row.bound) +
              ": zeros = " + std::to_string(row.zeros) + ", ratio = " +
              row.ratio.to_string() + " ~ " + row.ratio.to_decimal(6) + "\n";
    }
    emit(opt, text);
  }
  return kExitPass;
}

// --------------------------------------------------------------- series --

int run_series(const Options& opt) {
  const std::int64_t N = opt.precision < 0 ? 100 : opt.precision;
  if (N > kHardPrecisionCap)
    throw std::invalid_argument("series: precision exceeds budget " +
                                std::to_string(kHardPrecisionCap));
  if (opt.param && (*opt.param > 10000 || *opt.param < -10000))
    throw std::invalid_argument("series: --param out of the supported range");
  IntSeries s(0);
  if (opt.series_kind == "F") {
    if (!opt.param) throw CLI::ValidationError("series kind F needs --param z");
    s = euler_power(static_cast<int>(*opt.param) - 1, static_cast<int>(N));
  } else if (opt.series_kind == "C") {
    if (!opt.param) throw CLI::ValidationError("series kind C needs --param t");
    s = tcore_series(static_cast<int>(*opt.param), static_cast<int>(N));
  } else if (opt.series_kind == "A" || opt.series_kind == "B") {
    const int x_prec = N >= 1 ? static_cast<int>((N - 1) / 3) : 0;
    const IntSeries base = opt.series_kind == "A" ? euler_power(8, x_prec)
                                                  : tcore_series(3, x_prec);
    IntSeries reindexed = reindex_3n_plus_1(base);
    s = reindexed.precision() > N ? reindexed.truncated(static_cast<int>(N))
                                  : std::move(reindexed);
  } else if (opt.series_kind == "theta") {
    s = theta_hexagonal(static_cast<int>(N));
  } else {
    throw CLI::ValidationError("unknown series kind: " + opt.series_kind);
  }

  if (opt.format == "json") {
    nlohmann::json payload = {{"kind", opt.series_kind},
                              {"precision", s.precision()},
                              {"coefficients", series_to_json(s)}};
    if (opt.param) payload["param"] = *opt.param;
    emit(opt, payload.dump() + "\n");
  } else if (opt.format == "csv") {
    emit(opt, series_to_csv(s));
  } else {
    std::string text;
    for (int n = 0; n <= s.precision(); ++n)
      text += std::to_string(n) + " " + s[n].to_string() + "\n";
    emit(opt, text);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three independent routes to the Euler-product eighth power "
               "and 3-core counts, with cross-route verification"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* coeff = app.add_subcommand(
      "coeff", "one coefficient by one or all routes; exit 1 on disagreement");
  coeff->add_option("--kind", opt.kind, "a | b | a_star | b_star")
      ->check(CLI::IsMember({"a", "b", "a_star", "b_star"}));
  coeff->add_option("--n", opt.n, "index (x-power for a/b, q-power for starred)")
      ->required();
  coeff->add_option("--route", opt.route, "formula | series | bruteforce | all")
      ->check(CLI::IsMember({"formula", "series", "bruteforce", "all"}));
  coeff->add_option("--limit", opt.limit, "bruteforce index limit (default 50)");
  coeff->add_option("--precision", opt.precision,
                    "series precision budget (default 10000)");

  CLI::App* vanish = app.add_subcommand(
      "vanish", "vanishing verdict for a(n), b(n) with a prime certificate");
  vanish->add_option("--n", opt.n, "index n")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-route verification campaigns; exit 1 on mismatch");
  verify
      ->add_option("--suite", opt.suite,
                   "jacobi | no-formula | three-core | theorem1 | theta | "
                   "counterexample-t4 | all")
      ->check(CLI::IsMember({"jacobi", "no-formula", "three-core", "theorem1",
                             "theta", "counterexample-t4", "all"}));
  verify->add_option("--limit", opt.limit, "suite main limit");
  verify->add_option("--precision", opt.precision, "series precision");
  verify->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", opt.output, "write the report to a file");

  CLI::App* density = app.add_subcommand(
      "density", "zero-density rows over the formula route");
  density->add_option("--bounds", opt.bounds, "sweep bounds X")
      ->delimiter(',');
  density->add_option("--format", opt.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  density->add_option("--output", opt.output, "write rows to a file");

  CLI::App* series = app.add_subcommand(
      "series", "dump a named series with exact decimal coefficients");
  series->add_option("--kind", opt.series_kind, "F | C | A | B | theta")
      ->check(CLI::IsMember({"F", "C", "A", "B", "theta"}));
  series->add_option("--param", opt.param, "z for F, t for C");
  series->add_option("--precision", opt.precision, "truncation order");
  series->add_option("--format", opt.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  series->add_option("--output", opt.output, "write the dump to a file");

  try {
    app.parse(argc, argv);
    if (coeff->parsed()) return run_coeff(opt);
    if (vanish->parsed()) return run_vanish(opt);
    if (verify->parsed()) return run_verify(opt);
    if (density->parsed()) return run_density(opt);
    if (series->parsed()) return run_series(opt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
