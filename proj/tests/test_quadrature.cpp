#include <cmath>

#include "doctest.h"
#include "wgqed/errors.hpp"
#include "wgqed/quadrature.hpp"

using namespace wgqed;

TEST_CASE("adaptive quadrature nails smooth integrands") {
  const QuadratureResult q =
      integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                         std::acos(-1.0), 1e-12);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(q.evaluations > 0);
}

TEST_CASE("adaptive quadrature resolves a narrow feature") {
  // Lorentzian of width 1e-4 on [0,1]: uniform rules at this budget miss it.
  const double w = 1e-4;
  const QuadratureResult q = integrate_adaptive(
      [&](double x) {
        const double d = x - 0.3;
        return w / (d * d + w * w);
      },
      0.0, 1.0, 1e-10);
  const double exact = std::atan(0.7 / w) + std::atan(0.3 / w);
  CHECK(q.value == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("depth exhaustion raises instead of returning junk") {
  const double w = 1e-9;
  try {
    integrate_adaptive(
        [&](double x) {
          const double d = x - 0.5;
          return w / (d * d + w * w);
        },
        0.0, 1.0, 1e-12, 6);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_tolerance() > 1e-12);
  }
}

TEST_CASE("orientation and degenerate interval") {
  const QuadratureResult fwd =
      integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(fwd.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const QuadratureResult none =
      integrate_adaptive([](double x) { return x * x; }, 0.7, 0.7, 1e-12);
  CHECK(none.value == 0.0);
}
