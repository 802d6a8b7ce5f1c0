#pragma once

#include <functional>

namespace wgqed {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // accumulated error estimate
  long evaluations = 0;
};

// Adaptive Simpson integration of f over [a, b] to absolute tolerance
// abs_tol.  Each panel is accepted when the Richardson estimate
// |S_fine - S_coarse| <= 15 * local_tol; the extrapolated correction is
// folded into the result.  Throws QuadratureError once max_depth splits
// fail to reach tolerance on some panel.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth = 40);

}  // namespace wgqed
