#include "rootbounds/report_io.hpp"

#include <charconv>
#include <iomanip>

#include <json.hpp>

namespace rootbounds {

std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string report_to_json(const BoundReport& report,
                           int zero_root_multiplicity) {
  nlohmann::ordered_json j;
  if (!report.all_same_sign) {
    j["rho"] = report.rho;
    for (const auto& [s, value] : report.stage_bounds) {
      j["stage" + std::to_string(s)] = value;
    }
    j["rho_prime"] = report.rho_prime;
    j["rho_dprime"] = report.rho_dprime;
    j["theorem"] = report.theorem;
    j["lagrange"] = report.lagrange;
  }
  j["all_same_sign"] = report.all_same_sign;
  j["zero_root_multiplicity"] = zero_root_multiplicity;
  return j.dump();
}

void print_report_table(std::ostream& out, const BoundReport& report) {
  if (report.all_same_sign) {
    out << "all coefficients share one sign: no positive roots; 0 bounds the"
           " positive roots (real roots, if any, are non-positive)\n";
    return;
  }
  for (const auto& [name, value] : all_bound_entries(report)) {
    out << std::left << std::setw(18) << name << format_value(value) << "\n";
  }
}

}  // namespace rootbounds
