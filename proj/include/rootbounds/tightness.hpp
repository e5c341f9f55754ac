#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rootbounds/polynomial.hpp"

namespace rootbounds {

/// Tightness statistics for one bound over a corpus. Ratios are
/// bound / (oracle max real root), collected only from instances whose max
/// real root is positive; a bound that equals the root scores 1.0.
struct TightnessRow {
  std::string bound_name;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double worst_ratio = 0.0;
  /// Instances where this bound was the smallest in the report (ties go to
  /// the earlier bound in the fixed order).
  int win_count = 0;
};

struct TightnessStudy {
  /// One row per bound, fixed order: rho, stage2, stage3, stage4,
  /// rho_prime, rho_dprime, theorem, lagrange.
  std::vector<TightnessRow> rows;
  int instance_count = 0;
  /// Instances that produced ratios.
  int rated = 0;
  int no_real_roots = 0;
  int all_same_sign = 0;
  /// Instances whose real roots are all negative; an upper bound >= 1
  /// cannot be graded against them.
  int nonpositive_max_root = 0;
};

TightnessStudy tightness_study(const std::vector<Polynomial>& corpus,
                               double tol = 1e-12);

/// Fixed schema: header `bound,mean_ratio,median_ratio,worst_ratio,wins`,
/// one row per bound, 9 significant digits, '.' decimal separator, LF line
/// endings. Rows without samples carry empty ratio fields.
void write_tightness_csv(std::ostream& out, const TightnessStudy& study);

}  // namespace rootbounds
