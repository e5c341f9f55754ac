#pragma once

#include <ostream>
#include <string>

#include "rootbounds/bounds.hpp"

namespace rootbounds {

/// Shortest round-trip decimal form of v (always '.' as separator).
std::string format_value(double v);

/// Flat JSON object keyed by bound name (rho, stage1..stage4, rho_prime,
/// rho_dprime, theorem, lagrange) plus all_same_sign and
/// zero_root_multiplicity. Stage keys the degree does not admit are absent;
/// when all_same_sign is set only the two bookkeeping keys appear.
std::string report_to_json(const BoundReport& report, int zero_root_multiplicity);

/// Human-readable table with the per-extraction-degree detail rows.
void print_report_table(std::ostream& out, const BoundReport& report);

}  // namespace rootbounds
