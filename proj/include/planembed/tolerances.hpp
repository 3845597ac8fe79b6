#pragma once

namespace planembed {

/// All numeric thresholds in one place. Relative values are multiplied by
/// the diameter of the boundary polygon.
struct Tolerances {
  /// Max-norm bound on A*X - B for a solve.
  double residual_rel = 1e-9;
  /// Two points closer than this are treated as coincident.
  double geometric_rel = 1e-9;
  /// Row sums of a weight scheme must equal 1 to within this.
  double weight_sum = 1e-12;
  /// Edge pairs closer than suspect_factor * geometric tolerance (but not
  /// touching) are listed as suspect.
  double suspect_factor = 1e3;
};

}  // namespace planembed
