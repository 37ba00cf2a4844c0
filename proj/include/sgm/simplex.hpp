#pragma once

#include "sgm/ratmatrix.hpp"

namespace sgm {

/// Outcome of the feasibility problem A lambda = b, lambda >= 0.
/// Feasible: lambda holds a basic solution. Infeasible: farkas holds y with
/// y^T A <= 0 and y^T b > 0.
struct LpResult {
  bool feasible = false;
  RatVector lambda;
  RatVector farkas;
};

/// Exact phase-1 simplex with Bland's rule. Both outcomes are checked exactly
/// before returning; a failed check throws std::logic_error.
LpResult lp_feasible(const RatMatrix& a, const RatVector& b);

/// Exact checks used by lp_feasible and by callers holding stored results.
bool is_feasible_point(const RatMatrix& a, const RatVector& b, const RatVector& lambda);
bool is_farkas_vector(const RatMatrix& a, const RatVector& b, const RatVector& y);

}  // namespace sgm
