#include "rootbounds/tightness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "rootbounds/bounds.hpp"
#include "rootbounds/oracle.hpp"

namespace rootbounds {

namespace {

constexpr std::array<const char*, 8> kBoundOrder = {
    "rho",       "stage2",     "stage3",  "stage4",
    "rho_prime", "rho_dprime", "theorem", "lagrange"};

std::string csv_number(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
  return std::string(buf, ptr);
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) {
    return v[n / 2];
  }
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

TightnessStudy tightness_study(const std::vector<Polynomial>& corpus,
                               double tol) {
  TightnessStudy study;
  study.instance_count = static_cast<int>(corpus.size());
  std::map<std::string, std::vector<double>> ratios;
  std::map<std::string, int> wins;

  for (const Polynomial& p : corpus) {
    const BoundReport report = all_bounds(p, tol);
    if (report.all_same_sign) {
      ++study.all_same_sign;
      continue;
    }
    const std::optional<double> root = max_real_root(p, tol);
    if (!root) {
      ++study.no_real_roots;
      continue;
    }
    if (*root <= 0.0) {
      ++study.nonpositive_max_root;
      continue;
    }
    ++study.rated;
    const auto bounds = headline_bounds(report);
    double best = bounds.front().second;
    for (const auto& [name, value] : bounds) {
      ratios[name].push_back(value / *root);
      best = std::min(best, value);
    }
    // headline_bounds already follows the fixed order, so the first entry
    // matching the minimum takes the win on ties.
    for (const auto& [name, value] : bounds) {
      if (value == best) {
        ++wins[name];
        break;
      }
    }
  }

  for (const char* name : kBoundOrder) {
    TightnessRow row;
    row.bound_name = name;
    if (auto it = ratios.find(name); it != ratios.end() && !it->second.empty()) {
      const std::vector<double>& r = it->second;
      double sum = 0.0;
      double worst = r.front();
      for (double x : r) {
        sum += x;
        worst = std::max(worst, x);
      }
      row.mean_ratio = sum / static_cast<double>(r.size());
      row.median_ratio = median_of(r);
      row.worst_ratio = worst;
    }
    row.win_count = wins.count(name) ? wins[name] : 0;
    study.rows.push_back(std::move(row));
  }
  return study;
}

void write_tightness_csv(std::ostream& out, const TightnessStudy& study) {
  out << "bound,mean_ratio,median_ratio,worst_ratio,wins\n";
  for (const TightnessRow& row : study.rows) {
    out << row.bound_name << ',';
    // Ratios are >= 1 whenever samples exist; 0 marks an empty row.
    if (row.mean_ratio > 0.0) {
      out << csv_number(row.mean_ratio) << ',' << csv_number(row.median_ratio)
          << ',' << csv_number(row.worst_ratio);
    } else {
      out << ",,";
    }
    out << ',' << row.win_count << '\n';
  }
}

}  // namespace rootbounds
