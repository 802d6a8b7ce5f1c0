#include "wgqed/quadrature.hpp"

#include <cmath>

#include "wgqed/errors.hpp"

namespace wgqed {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double simpson;
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

struct Worker {
  const std::function<double(double)>& f;
  long evaluations = 0;
  double error_acc = 0.0;
  // Largest unmet panel error, reported when the depth budget runs out.
  double worst_unmet = 0.0;
  bool failed = false;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  // Depth-first refinement; tol halves with the interval so the per-panel
  // acceptances sum to at most the caller's budget.
  double refine(const Panel& p, double tol, int depth, int max_depth) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double h = p.b - p.a;
    const double s_left = simpson(p.fa, flm, p.fm, 0.5 * h);
    const double s_right = simpson(p.fm, frm, p.fb, 0.5 * h);
    const double delta = s_left + s_right - p.simpson;
    if (std::abs(delta) <= 15.0 * tol || depth >= max_depth) {
      if (std::abs(delta) > 15.0 * tol) {
        failed = true;
        if (std::abs(delta) / 15.0 > worst_unmet) {
          worst_unmet = std::abs(delta) / 15.0;
        }
      }
      error_acc += std::abs(delta) / 15.0;
      return s_left + s_right + delta / 15.0;
    }
    Panel left{p.a, m, p.fa, flm, p.fm, s_left};
    Panel right{m, p.b, p.fm, frm, p.fb, s_right};
    return refine(left, 0.5 * tol, depth + 1, max_depth) +
           refine(right, 0.5 * tol, depth + 1, max_depth);
  }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
  if (!(abs_tol > 0.0)) {
    throw NumericalError("integrate_adaptive", "tolerance must be positive");
  }
  if (a == b) return {0.0, 0.0, 0};

  Worker w{f};
  const double m = 0.5 * (a + b);
  Panel root{a, b, w.eval(a), w.eval(m), w.eval(b), 0.0};
  root.simpson = simpson(root.fa, root.fm, root.fb, b - a);
  const double value = w.refine(root, abs_tol, 0, max_depth);
  if (w.failed) {
    throw QuadratureError(w.worst_unmet,
                          "subdivision budget exhausted before tolerance");
  }
  return {value, w.error_acc, w.evaluations};
}

}  // namespace wgqed
