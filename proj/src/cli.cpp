#include "rootbounds/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rootbounds/bounds.hpp"
#include "rootbounds/generator.hpp"
#include "rootbounds/oracle.hpp"
#include "rootbounds/parse.hpp"
#include "rootbounds/report_io.hpp"
#include "rootbounds/tightness.hpp"

namespace rootbounds {

namespace {

constexpr double kSoundnessTol = 1e-9;

std::vector<double> read_coefficients(const std::string& poly_arg,
                                      bool descending, std::istream& in) {
  std::string text = poly_arg;
  if (text == "-") {
    std::ostringstream slurp;
    slurp << in.rdbuf();
    text = slurp.str();
  }
  std::vector<double> coeffs = parse_poly(text);
  if (descending && is_list_syntax(text)) {
    std::reverse(coeffs.begin(), coeffs.end());
  }
  return coeffs;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type from = 0;
  while (true) {
    const auto at = s.find(sep, from);
    parts.push_back(s.substr(from, at - from));
    if (at == std::string::npos) {
      break;
    }
    from = at + 1;
  }
  return parts;
}

double parse_double_field(const std::string& s, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CLI::ValidationError(std::string("invalid ") + what + ": " + s);
  }
  return v;
}

int parse_int_field(const std::string& s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CLI::ValidationError(std::string("invalid ") + what + ": " + s);
  }
  return v;
}

CoefficientDistribution parse_distribution(const std::string& text) {
  const std::vector<std::string> parts = split_on(text, ':');
  if (parts.size() == 3 && parts[0] == "int") {
    return UniformIntDist{parse_int_field(parts[1], "distribution bound"),
                          parse_int_field(parts[2], "distribution bound")};
  }
  if (parts.size() == 3 && parts[0] == "real") {
    return UniformRealDist{parse_double_field(parts[1], "distribution bound"),
                           parse_double_field(parts[2], "distribution bound")};
  }
  if ((parts.size() == 4 || parts.size() == 5) && parts[0] == "planted") {
    PlantedRootsDist pr;
    pr.root_lo = parse_double_field(parts[1], "root bound");
    pr.root_hi = parse_double_field(parts[2], "root bound");
    pr.degree = parse_int_field(parts[3], "planted degree");
    if (parts.size() == 5) {
      pr.min_gap = parse_double_field(parts[4], "min gap");
    }
    return pr;
  }
  throw CLI::ValidationError(
      "distribution must be int:LO:HI, real:LO:HI or planted:LO:HI:DEG[:GAP]");
}

struct PolyCommandState {
  std::string poly;
  bool descending = false;
};

void print_parse_result(std::ostream& out, const NormalizedPolynomial& norm) {
  out << "normalized: " << format_poly(norm.poly) << "\n";
  out << "degree: " << norm.poly.degree() << "\n";
  out << "zero root multiplicity: " << norm.zero_root_multiplicity << "\n";
}

int cmd_bounds(std::ostream& out, const NormalizedPolynomial& norm, bool json,
               bool negative, double tol) {
  if (!negative) {
    const BoundReport report = all_bounds(norm.poly, tol);
    if (json) {
      out << report_to_json(report, norm.zero_root_multiplicity) << "\n";
    } else {
      out << "polynomial: " << format_poly(norm.poly) << "\n";
      if (norm.zero_root_multiplicity > 0) {
        out << "zero root multiplicity: " << norm.zero_root_multiplicity
            << "\n";
      }
      print_report_table(out, report);
    }
    return 0;
  }

  // Harness convenience, not a bound formula: upper bounds of p(-x),
  // negated, are lower bounds on the real roots of p.
  const NormalizedPolynomial reflected = normalize(reflect(norm.poly).coeffs());
  const BoundReport report = all_bounds(reflected.poly, tol);
  if (json) {
    std::string body = report_to_json(report, norm.zero_root_multiplicity);
    // annotate the transform without disturbing the flat schema
    body.insert(1, "\"negative_transform\":true,");
    out << body << "\n";
    return 0;
  }
  out << "polynomial: " << format_poly(norm.poly) << "\n";
  out << "lower bounds on real roots via the x -> -x transform"
         " (negated upper bounds of p(-x)):\n";
  if (report.all_same_sign) {
    out << "p(-x) has all coefficients of one sign: no negative roots;"
           " 0 is a lower bound of the real roots\n";
    return 0;
  }
  for (const auto& [name, value] : all_bound_entries(report)) {
    out << std::left << std::setw(18) << name << format_value(-value) << "\n";
  }
  return 0;
}

int cmd_verify(std::ostream& out, const NormalizedPolynomial& norm, double tol) {
  out << "polynomial: " << format_poly(norm.poly) << "\n";
  if (norm.zero_root_multiplicity > 0) {
    out << "zero root multiplicity: " << norm.zero_root_multiplicity
        << " (root x = 0 factored out)\n";
  }
  const BoundReport report = all_bounds(norm.poly, tol);
  if (report.all_same_sign) {
    print_report_table(out, report);
    out << "verdict: PASS (vacuous)\n";
    return 0;
  }
  if (norm.poly.degree() < 1) {
    out << "constant polynomial: no roots to verify\nverdict: PASS (vacuous)\n";
    return 0;
  }
  const std::optional<double> root = max_real_root(norm.poly, tol);
  if (!root) {
    out << "oracle: no real roots; soundness vacuously holds\n";
    for (const auto& [name, value] : all_bound_entries(report)) {
      out << std::left << std::setw(18) << name << format_value(value)
          << "  PASS\n";
    }
    out << "verdict: PASS\n";
    return 0;
  }
  out << "oracle max real root: " << format_value(*root) << "\n";
  const double allowance = kSoundnessTol * std::max(1.0, std::fabs(*root));
  bool ok = true;
  for (const auto& [name, value] : all_bound_entries(report)) {
    const bool pass = value >= *root - allowance;
    ok = ok && pass;
    out << std::left << std::setw(18) << name << format_value(value)
        << (pass ? "  PASS" : "  FAIL") << "\n";
  }
  out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

struct BenchOptions {
  std::uint64_t seed = 1;
  int count = 100;
  std::string degrees = "3:10";
  std::string dist = "int:-10:10";
  std::string csv_path;
  double tol = 1e-12;
  bool allow_same_sign = false;
};

int cmd_bench(std::ostream& out, std::ostream& err, const BenchOptions& opt) {
  GeneratorSpec spec;
  const std::vector<std::string> range = split_on(opt.degrees, ':');
  if (range.size() != 2) {
    throw CLI::ValidationError("--degrees expects LO:HI");
  }
  spec.degree_lo = parse_int_field(range[0], "degree");
  spec.degree_hi = parse_int_field(range[1], "degree");
  spec.dist = parse_distribution(opt.dist);
  spec.count = opt.count;
  spec.seed = opt.seed;
  spec.require_mixed_signs = !opt.allow_same_sign;

  const std::vector<Polynomial> corpus = gen_random(spec);
  const TightnessStudy study = tightness_study(corpus, opt.tol);

  if (opt.csv_path.empty()) {
    write_tightness_csv(out, study);
  } else {
    std::ofstream file(opt.csv_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << opt.csv_path << " for writing\n";
      return 2;
    }
    write_tightness_csv(file, study);
  }
  err << "instances: " << study.instance_count << ", rated: " << study.rated
      << ", no real roots: " << study.no_real_roots
      << ", all same sign: " << study.all_same_sign
      << ", non-positive max root: " << study.nonpositive_max_root << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"real-root upper and lower bounds for univariate polynomials"};
  app.require_subcommand(1);

  PolyCommandState parse_state;
  CLI::App* parse_cmd =
      app.add_subcommand("parse", "normalize a polynomial and echo it");
  parse_cmd->add_option("poly", parse_state.poly,
                        "expression, coefficient list, or '-' for stdin")
      ->required();
  parse_cmd->add_flag("--descending", parse_state.descending,
                      "treat list-syntax coefficients as descending");

  PolyCommandState bounds_state;
  bool bounds_json = false;
  bool bounds_negative = false;
  double bounds_tol = 1e-12;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "print every root bound for a polynomial");
  bounds_cmd->add_option("poly", bounds_state.poly,
                         "expression, coefficient list, or '-' for stdin")
      ->required();
  bounds_cmd->add_flag("--descending", bounds_state.descending,
                       "treat list-syntax coefficients as descending");
  bounds_cmd->add_flag("--json", bounds_json, "machine-readable output");
  bounds_cmd->add_flag("--negative", bounds_negative,
                       "lower bounds via the x -> -x transform");
  bounds_cmd->add_option("--tol", bounds_tol, "solver relative tolerance");

  PolyCommandState verify_state;
  double verify_tol = 1e-12;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check every bound against the root-isolation oracle");
  verify_cmd->add_option("poly", verify_state.poly,
                         "expression, coefficient list, or '-' for stdin")
      ->required();
  verify_cmd->add_flag("--descending", verify_state.descending,
                       "treat list-syntax coefficients as descending");
  verify_cmd->add_option("--tol", verify_tol, "oracle tolerance");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "tightness study over a seeded random corpus");
  bench_cmd->add_option("--seed", bench.seed, "corpus seed");
  bench_cmd->add_option("--count", bench.count, "number of instances");
  bench_cmd->add_option("--degrees", bench.degrees, "degree range LO:HI");
  bench_cmd->add_option("--dist", bench.dist,
                        "int:LO:HI | real:LO:HI | planted:LO:HI:DEG[:GAP]");
  bench_cmd->add_option("--csv", bench.csv_path, "write the CSV here");
  bench_cmd->add_option("--tol", bench.tol, "oracle/solver tolerance");
  bench_cmd->add_flag("--allow-same-sign", bench.allow_same_sign,
                      "keep all-same-sign draws in the corpus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (*parse_cmd) {
      const auto raw =
          read_coefficients(parse_state.poly, parse_state.descending, in);
      print_parse_result(out, normalize(raw));
      return 0;
    }
    if (*bounds_cmd) {
      const auto raw =
          read_coefficients(bounds_state.poly, bounds_state.descending, in);
      return cmd_bounds(out, normalize(raw), bounds_json, bounds_negative,
                        bounds_tol);
    }
    if (*verify_cmd) {
      const auto raw =
          read_coefficients(verify_state.poly, verify_state.descending, in);
      return cmd_verify(out, normalize(raw), verify_tol);
    }
    if (*bench_cmd) {
      return cmd_bench(out, err, bench);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rootbounds
