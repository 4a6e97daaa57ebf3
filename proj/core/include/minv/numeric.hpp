#pragma once

#include <vector>

#include "minv/derivative.hpp"

namespace minv {

/// Fixed-step trajectory; states[i] is the state at times[i].
struct Trajectory {
  double step = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

struct DriftReport {
  double initial_value = 0;
  double max_drift = 0;
  double step = 0;
  double horizon = 0;
};

/// Evaluates y_i' = sum_j c_ij y^(H_j + u_i) per combined exponent, so
/// removable singularities like y1 * y1^-1 y2 evaluate cleanly. Fractional
/// powers need strictly positive bases, negative integer powers a nonzero
/// base; violations raise DomainError naming the component and exponent.
std::vector<double> rhs_eval(const MultinomialSystem& s, const std::vector<double>& y);

/// Classical fixed-step 4-stage integration over ceil(T/h) steps.
/// Cross-validation only; drift of a true invariant shrinks as O(h^4).
Trajectory rk4(const MultinomialSystem& s, std::vector<double> y0, double h, double t_end);

/// Floating-point value of an integral at a state, same domain policy as
/// rhs_eval; logarithm arguments must be positive.
double eval_integral(const Integral& i, const std::vector<double>& y);

/// Max |I(y(t)) - I(y(0))| along the trajectory.
DriftReport drift(const Integral& i, const Trajectory& tr);

}  // namespace minv
