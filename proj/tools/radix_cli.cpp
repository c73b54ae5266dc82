// radix_cli: digit-sum exponents, generalized binomial products, their
// log-sums, the limit functions and the validation suites.
//
// Exit codes: 0 success, 1 validation or consistency failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radix/radix.hpp"

namespace {

using radix::detail::fmt;
using json = nlohmann::json;

struct Options {
  std::string format = "human";
  std::string output;
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json u128_json(radix::u128 v) {
  if ((v >> 64) == 0) return static_cast<std::uint64_t>(v);
  return radix::detail::to_string(v);
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

// ---- nu / digits ----------------------------------------------------------

int cmd_nu(std::ostream& os, const Options& o, std::uint64_t n, std::uint64_t b) {
  const radix::u128 nu = radix::nu_bar_u128(n, b);
  if (o.format == "json") {
    os << json{{"n", n}, {"b", b}, {"nu", u128_json(nu)}}.dump() << '\n';
  } else if (o.format == "csv") {
    os << "n,b,nu\n";
    write_csv_row(os, {std::to_string(n), std::to_string(b), radix::detail::to_string(nu)});
  } else {
    os << radix::detail::to_string(nu) << '\n';
  }
  return 0;
}

int cmd_digits(std::ostream& os, const Options& o, std::uint64_t n, std::uint64_t b) {
  const auto de = radix::digits(n, b);
  const std::uint64_t sum = n == 0 ? 0 : radix::digit_sum(n, b);
  if (o.format == "json") {
    os << json{{"n", n}, {"b", b}, {"digits_lsb_first", de.digits}, {"digit_sum", sum}}.dump() << '\n';
  } else if (o.format == "csv") {
    os << "position,digit\n";
    for (std::size_t i = 0; i < de.digits.size(); ++i) write_csv_row(os, {std::to_string(i), std::to_string(de.digits[i])});
  } else {
    os << "digits (most significant first):";
    for (auto it = de.digits.rbegin(); it != de.digits.rend(); ++it) os << ' ' << *it;
    if (de.digits.empty()) os << " 0";
    os << "\ndigit sum: " << sum << '\n';
  }
  return 0;
}

// ---- product ---------------------------------------------------------------

int cmd_product(std::ostream& os, const Options& o, std::uint64_t n, double x, const std::string& repr,
                double max_bits) {
  if (repr == "log") {
    const auto acc = radix::log_partial_product(n, x);
    if (o.format == "json") {
      os << json{{"n", n}, {"x", x}, {"log", acc.value()}, {"error_bound", acc.error_bound()}}.dump() << '\n';
    } else if (o.format == "csv") {
      os << "n,x,log,error_bound\n";
      write_csv_row(os, {std::to_string(n), fmt(x), fmt(acc.value()), fmt(acc.error_bound())});
    } else {
      os << fmt(acc.value()) << '\n';
    }
    return 0;
  }

  const auto pf = radix::partial_product(n, x);
  if (repr == "factors") {
    if (o.format == "json") {
      os << radix::to_json(pf).dump() << '\n';
    } else if (o.format == "csv") {
      os << "b,nu\n";
      for (const auto& [b, e] : pf.exponents()) write_csv_row(os, {std::to_string(b), e.get_str()});
    } else {
      if (pf.exponents().empty()) os << "(empty)";
      bool first = true;
      for (const auto& [b, e] : pf.exponents()) {
        os << (first ? "" : " * ") << b << '^' << e.get_str();
        first = false;
      }
      os << '\n';
    }
    return 0;
  }

  const double bits = pf.estimated_bits();
  if (bits > max_bits)
    std::cerr << "warning: value has about " << fmt(bits) << " bits, above the cap of " << fmt(max_bits) << '\n';
  const radix::BigInt v = pf.value();
  if (o.format == "json") {
    os << json{{"n", n}, {"cutoff", pf.cutoff()}, {"value", v.get_str()}}.dump() << '\n';
  } else if (o.format == "csv") {
    os << "n,cutoff,value\n";
    write_csv_row(os, {std::to_string(n), std::to_string(pf.cutoff()), v.get_str()});
  } else {
    os << v.get_str() << '\n';
  }
  return 0;
}

// ---- sums ------------------------------------------------------------------

int cmd_sums(std::ostream& os, const Options& o, std::uint64_t n, double x) {
  const auto a = radix::a_sum(n, x);
  const auto b = radix::b_sum(n, x);
  const auto g = radix::log_partial_product(n, x);
  const auto c = radix::c_sum(static_cast<double>(n), x);
  const std::vector<std::pair<std::string, const radix::LogAccumulator*>> rows = {
      {"A", &a}, {"B", &b}, {"C", &c}, {"logGG", &g}};
  if (o.format == "json") {
    json j = {{"n", n}, {"x", x}};
    for (const auto& [name, acc] : rows) j[name] = {{"value", acc->value()}, {"error_bound", acc->error_bound()}};
    os << j.dump() << '\n';
  } else if (o.format == "csv") {
    os << "quantity,value,error_bound\n";
    for (const auto& [name, acc] : rows) write_csv_row(os, {name, fmt(acc->value()), fmt(acc->error_bound())});
  } else {
    for (const auto& [name, acc] : rows)
      os << std::left << std::setw(6) << name << fmt(acc->value()) << "  (+- " << fmt(acc->error_bound()) << ")\n";
  }
  return 0;
}

// ---- scan ------------------------------------------------------------------

int cmd_scan(std::ostream& os, const Options& o, std::uint64_t n, double step) {
  const auto reports = radix::scan_alpha(n, step);
  if (o.format == "json")
    os << radix::to_json(reports).dump(1) << '\n';
  else
    radix::write_reports_csv(os, reports);
  return 0;
}

// ---- validate --------------------------------------------------------------

int cmd_validate(std::ostream& os, const Options& o, const std::string& suite, std::uint64_t max_n) {
  std::vector<radix::SuiteResult> results;
  auto pick = [&](std::uint64_t dflt) { return max_n == 0 ? dflt : max_n; };
  if (suite == "theorems" || suite == "all") results.push_back(radix::run_theorem_suite(pick(2000)));
  if (suite == "identities" || suite == "all") results.push_back(radix::run_identity_suite(pick(500)));
  if (suite == "inequalities" || suite == "all") results.push_back(radix::run_inequality_suite(pick(1000)));
  if (suite == "remainders" || suite == "all") {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t m = 256; m <= pick(4096); m *= 2) ns.push_back(m);
    if (ns.empty()) throw usage_error("remainders suite needs --max-n >= 256");
    results.push_back(radix::run_remainder_suite(ns));
  }

  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(radix::to_json(r));
    os << json{{"passed", ok}, {"suites", arr}}.dump(1) << '\n';
  } else if (o.format == "csv") {
    os << "suite,cases_run,failures\n";
    for (const auto& r : results)
      write_csv_row(os, {r.suite_name, std::to_string(r.cases_run), std::to_string(r.failures.size())});
  } else {
    for (const auto& r : results) {
      os << r.suite_name << ": " << r.cases_run << " cases, " << r.failures.size() << " failures\n";
      std::size_t shown = 0;
      for (const auto& f : r.failures) {
        if (++shown > 20) {
          os << "  ...\n";
          break;
        }
        os << "  " << f.inputs << ": expected " << f.expected << ", got " << f.got << " [" << f.citation << "]\n";
      }
    }
  }
  return ok ? 0 : 1;
}

// ---- plotdata --------------------------------------------------------------

double fA_derivative(double alpha) {
  constexpr double h = 1e-6;
  constexpr double zone = 1e-5;
  // Distance to the nearest breakpoint 1/k and which side we are on.
  const double k_near = std::max(1.0, std::round(1.0 / alpha));
  bool near_above = false, near_below = false;
  for (double k = std::max(1.0, k_near - 1); k <= k_near + 1; k += 1) {
    const double d = alpha - 1.0 / k;
    if (d >= 0 && d < zone) near_above = true;
    if (d < 0 && -d < zone) near_below = true;
  }
  if (alpha + h > 1.0 || near_below) return (radix::f_A(alpha) - radix::f_A(alpha - h)) / h;
  if (near_above) return (radix::f_A(alpha + h) - radix::f_A(alpha)) / h;
  return (radix::f_A(alpha + h) - radix::f_A(alpha - h)) / (2 * h);
}

int cmd_plotdata(std::ostream& os, const Options& o, const std::string& fn, double grid, double lo, double hi) {
  if (!(lo > 0 && hi <= 1 && lo <= hi)) throw usage_error("plotdata: range must satisfy 0 < lo <= hi <= 1");
  if (!(grid > 0)) throw usage_error("plotdata: grid must be positive");
  const std::map<std::string, double (*)(double)> table = {
      {"fG", [](double a) { return radix::f_G(a); }}, {"gG", [](double a) { return radix::g_G(a); }},
      {"fA", [](double a) { return radix::f_A(a); }}, {"gA", [](double a) { return radix::g_A(a); }},
      {"fB", [](double a) { return radix::f_B(a); }}, {"gB", [](double a) { return radix::g_B(a); }},
      {"fA_deriv", fA_derivative}};
  const auto f = table.at(fn);
  const auto steps = static_cast<std::uint64_t>(std::floor((hi - lo) / grid + 1e-9));
  std::vector<std::pair<double, double>> rows;
  for (std::uint64_t i = 0; i <= steps; ++i) {
    const double a = lo + static_cast<double>(i) * grid;
    rows.emplace_back(a, f(a));
  }
  if (hi - rows.back().first > 1e-12) rows.emplace_back(hi, f(hi));

  if (o.format == "json") {
    json arr = json::array();
    for (auto [a, v] : rows) arr.push_back({{"alpha", a}, {"value", v}});
    os << json{{"function", fn}, {"rows", arr}}.dump() << '\n';
  } else {
    os << "alpha," << "value\n";
    for (auto [a, v] : rows) write_csv_row(os, {fmt(a), fmt(v)});
  }
  return 0;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(std::ostream& os, const Options& o, std::uint64_t n, bool full_naive, std::uint64_t strata,
              std::uint64_t series_n) {
  const auto r = radix::run_bench(n, full_naive, strata, series_n);
  if (o.format == "json") {
    os << json{{"n", r.n},
               {"fast_seconds", r.fast_seconds},
               {"naive_seconds", r.naive_seconds},
               {"naive_extrapolated", r.naive_extrapolated},
               {"naive_bases_timed", r.naive_bases_timed},
               {"naive_agrees", r.naive_agrees},
               {"speedup", r.speedup()},
               {"checksum", u128_json(r.checksum)},
               {"series_max_n", r.series_max_n},
               {"series_seconds", r.series_seconds},
               {"series_last_log", r.series_last_log}}
              .dump()
       << '\n';
  } else if (o.format == "csv") {
    os << "metric,value\n";
    write_csv_row(os, {"n", std::to_string(r.n)});
    write_csv_row(os, {"fast_seconds", fmt(r.fast_seconds)});
    write_csv_row(os, {"naive_seconds", fmt(r.naive_seconds)});
    write_csv_row(os, {"naive_extrapolated", r.naive_extrapolated ? "1" : "0"});
    write_csv_row(os, {"speedup", fmt(r.speedup())});
    write_csv_row(os, {"series_max_n", std::to_string(r.series_max_n)});
    write_csv_row(os, {"series_seconds", fmt(r.series_seconds)});
  } else {
    os << "nu(n, b) for 2 <= b <= " << r.n << "\n"
       << "  floor-sum kernel:   " << fmt(r.fast_seconds) << " s\n"
       << "  digit summation:    " << fmt(r.naive_seconds) << " s"
       << (r.naive_extrapolated ? " (extrapolated from " + std::to_string(r.naive_bases_timed) + " bases)" : "")
       << "\n  speedup:            " << fmt(r.speedup()) << "x\n"
       << "  routes agree:       " << (r.naive_agrees ? "yes" : "NO") << '\n';
    if (r.series_max_n)
      os << "log GG_n for n <= " << r.series_max_n << ": " << fmt(r.series_seconds) << " s\n";
  }
  return r.naive_agrees ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  CLI::App app{"Digit-sum exponents and generalized binomial products"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--output", opt.output, "Write output to this file instead of stdout");
  app.fallthrough();

  std::uint64_t n = 0, b = 0, max_n = 0, strata = 64, series_n = 4096;
  double x = 0, step = 0.01, grid = 0.01, lo = 0.01, hi = 1.0, max_bits = 1e8;
  std::string repr = "factors", suite = "all", function = "fG";
  bool full_naive = false;

  auto* nu = app.add_subcommand("nu", "Exponent nu(n, b)");
  nu->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  nu->add_option("--b", b)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));

  auto* dg = app.add_subcommand("digits", "Base-b digits of n");
  dg->add_option("--n", n)->required();
  dg->add_option("--b", b)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));

  auto* pr = app.add_subcommand("product", "Partial product GG(n, x)");
  pr->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  pr->add_option("--x", x)->required();
  pr->add_option("--representation", repr)->check(CLI::IsMember({"factors", "value", "log"}));
  pr->add_option("--max-bits", max_bits, "Warn when the value is larger than this many bits");

  auto* sm = app.add_subcommand("sums", "Log-sums A(n, x), B(n, x), C(n, x) and log GG(n, x)");
  sm->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  sm->add_option("--x", x)->required();

  auto* sc = app.add_subcommand("scan", "Exact vs predicted over a grid of alpha");
  sc->add_option("--n", n)->required();
  sc->add_option("--step", step);

  auto* va = app.add_subcommand("validate", "Run validation suites");
  va->add_option("--suite", suite)->check(CLI::IsMember({"theorems", "identities", "inequalities", "remainders", "all"}));
  va->add_option("--max-n", max_n, "Largest n (suite default when omitted)");

  auto* pd = app.add_subcommand("plotdata", "Limit-function values as CSV");
  pd->add_option("--function", function)->check(CLI::IsMember({"fG", "gG", "fA", "gA", "fB", "gB", "fA_deriv"}));
  pd->add_option("--grid", grid);
  pd->add_option("--lo", lo);
  pd->add_option("--hi", hi);

  auto* be = app.add_subcommand("bench", "Time the fast kernel against digit summation");
  be->add_option("--max-n", n, "n for the nu(n, b) table")->default_val(100000);
  be->add_flag("--full-naive", full_naive, "Time digit summation on every base instead of a sample");
  be->add_option("--strata", strata, "Number of sampled bases for the digit-summation estimate");
  be->add_option("--series-max-n", series_n, "Largest n in the log GG_n series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) {
      std::cerr << "error: cannot open " << opt.output << '\n';
      return 2;
    }
  }
  std::ostream& os = opt.output.empty() ? std::cout : file;
  os.imbue(std::locale::classic());

  try {
    if (*nu) return cmd_nu(os, opt, n, b);
    if (*dg) return cmd_digits(os, opt, n, b);
    if (*pr) return cmd_product(os, opt, n, x, repr, max_bits);
    if (*sm) return cmd_sums(os, opt, n, x);
    if (*sc) return cmd_scan(os, opt, n, step);
    if (*va) return cmd_validate(os, opt, suite, max_n);
    if (*pd) return cmd_plotdata(os, opt, function, grid, lo, hi);
    if (*be) return cmd_bench(os, opt, n, full_naive, strata, series_n);
  } catch (const radix::consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
