#include "wgqed/greens_continuum.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "wgqed/errors.hpp"
#include "wgqed/quadrature.hpp"

namespace wgqed {

namespace {

constexpr double pi = 3.14159265358979323846;

// Fraction of the fundamental spacing c*pi/L beyond which the single-mode
// picture is considered stretched; tunable, warning only.
constexpr double single_mode_validity_fraction = 0.25;

}  // namespace

double mode_wavenumber(const WaveguideSpec& wg, long l) {
  return static_cast<double>(l) * pi / wg.length_L;
}

double mode_frequency(const WaveguideSpec& wg, long l) {
  const double ck = wg.speed_c * mode_wavenumber(wg, l);
  return std::hypot(ck, wg.omega_c);
}

double mode_amplitude(const WaveguideSpec& wg, long l, double z) {
  // u in [0, 1] across the waveguide; endpoints pinned to exact zeros so the
  // mirror boundary condition survives floating point at any mode index.
  const double u = (z + 0.5 * wg.length_L) / wg.length_L;
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return std::sqrt(2.0 / wg.length_L) *
         std::sin(static_cast<double>(l) * pi * u);
}

complexd regularized_omega(const WaveguideSpec& wg, double omega) {
  return complexd(omega, wg.eta * wg.omega_c);
}

complexd evanescent_scale(const WaveguideSpec& wg, complexd omega) {
  complexd w = std::sqrt(wg.omega_c * wg.omega_c - omega * omega);
  // Retarded branch: fourth quadrant, decaying in the stopband and outgoing
  // (-i k c) in the passband.
  if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() > 0.0)) w = -w;
  return w;
}

complexd image_kernel(const WaveguideSpec& wg, double z, double zp,
                      complexd w) {
  const double c = wg.speed_c;
  const double L = wg.length_L;
  const double x = std::abs(z - zp);
  const double xp = z + zp + L;  // >= 0 inside the waveguide
  // Every exponent has non-positive real part for Re(w) >= 0, so the form is
  // overflow-free at arbitrary w L / c; deep-stopband exponentials flush to
  // zero harmlessly.
  const complexd num = -std::exp(-w * (2.0 * L - x) / c) +
                       std::exp(-w * (2.0 * L - xp) / c) -
                       std::exp(-w * x / c) + std::exp(-w * xp / c);
  const complexd den = 1.0 - std::exp(-w * (2.0 * L) / c);
  if (std::abs(den) == 0.0) {
    throw NumericalError("image_kernel",
                         "singular image sum (w = 0 or unregularized "
                         "standing-wave resonance)");
  }
  return num / den;
}

complexd g0_truncated(const WaveguideSpec& wg, double z, double zp,
                      double omega, long n_modes, bool include_fk) {
  if (n_modes < 1) {
    throw std::invalid_argument("g0_truncated: n_modes must be >= 1");
  }
  const complexd omega_r = regularized_omega(wg, omega);
  const double norm = 2.0 / wg.length_L;
  const double u = (z + 0.5 * wg.length_L) / wg.length_L;
  const double up = (zp + 0.5 * wg.length_L) / wg.length_L;
  if (u <= 0.0 || u >= 1.0 || up <= 0.0 || up >= 1.0) {
    return complexd(0.0, 0.0);
  }

  // Kahan compensation: the tail terms decay only as 1/l and alternate, so a
  // naive sum loses digits against the 1e-10-relative oracle at n = 1e6.
  complexd sum(0.0, 0.0);
  complexd comp(0.0, 0.0);
  for (long l = 1; l <= n_modes; ++l) {
    const double lp = static_cast<double>(l) * pi;
    const double ck = wg.speed_c * lp / wg.length_L;
    const double eps_l = std::hypot(ck, wg.omega_c);
    double weight = norm * std::sin(lp * u) * std::sin(lp * up);
    if (include_fk) weight *= eps_l / wg.omega_c;
    const complexd term = wg.speed_c * weight / (omega_r - eps_l);
    const complexd y = term - comp;
    const complexd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

complexd g0_pole(const WaveguideSpec& wg, double z, double zp, double omega) {
  const complexd omega_r = regularized_omega(wg, omega);
  const complexd w = evanescent_scale(wg, omega_r);
  if (std::abs(w) == 0.0) {
    throw NumericalError("g0_pole",
                         "w = 0 at the cutoff; set eta > 0 or move omega");
  }
  return (omega_r / w) * image_kernel(wg, z, zp, w);
}

complexd g0_long(const WaveguideSpec& wg, double z, double zp, double omega) {
  if (omega >= wg.omega_c) {
    throw std::domain_error(
        "g0_long: defined only in the stopband (omega < omega_c)");
  }
  const complexd omega_r = regularized_omega(wg, omega);
  const complexd w = evanescent_scale(wg, omega_r);
  return -(omega_r / w) * std::exp(-w * std::abs(z - zp) / wg.speed_c);
}

complexd g0_single_mode(const WaveguideSpec& wg, double z, double zp,
                        double omega) {
  const double eps_1 = mode_frequency(wg, 1);
  const complexd delta_bar = eps_1 - regularized_omega(wg, omega);
  if (std::abs(delta_bar) == 0.0) {
    throw NumericalError("g0_single_mode",
                         "omega coincides with the fundamental resonance");
  }
  const double spacing_scale = wg.speed_c * pi / wg.length_L;
  if (std::abs(delta_bar) > single_mode_validity_fraction * spacing_scale) {
    std::clog << "wgqed: g0_single_mode: |eps_1 - omega| = "
              << std::abs(delta_bar)
              << " rad/s is not small against c*pi/L = " << spacing_scale
              << "; single-resonance picture is stretched\n";
  }
  const double u = (z + 0.5 * wg.length_L) / wg.length_L;
  const double up = (zp + 0.5 * wg.length_L) / wg.length_L;
  if (u <= 0.0 || u >= 1.0 || up <= 0.0 || up >= 1.0) {
    return complexd(0.0, 0.0);
  }
  const double geometry =
      std::cos(pi * std::abs(z - zp) / wg.length_L) -
      std::cos(pi * (z + zp + wg.length_L) / wg.length_L);
  return -(wg.speed_c / (wg.length_L * delta_bar)) * geometry;
}

BranchCutResult g0_branchcut(const WaveguideSpec& wg, double z, double zp,
                             double omega, double omega_hf) {
  if (!(omega_hf > 10.0 * wg.omega_c)) {
    throw std::invalid_argument(
        "g0_branchcut: omega_hf must exceed 10 * omega_c");
  }
  // Substitution omega_bar = omega_c cosh(lambda) removes the square-root
  // edge singularity at the band edge; the kernel then decays like
  // exp(-omega_bar d_min / c) with d_min the shortest image distance.
  const double lambda_max = std::acosh(omega_hf / wg.omega_c);
  auto integrand = [&](double lambda) {
    const double s = wg.omega_c * std::sinh(lambda);
    const double omega_bar = wg.omega_c * std::cosh(lambda);
    const double kernel = image_kernel(wg, z, zp, complexd(omega_bar, 0.0)).real();
    return (1.0 / pi) * s / (omega * omega + s * s) * kernel * s;
  };
  // A blind adaptive pass can step over the support entirely when the decay
  // confines it to a sliver of [0, lambda_max]; split at the lambda where the
  // kernel has fallen by e^-30 so the first panel always straddles the bump.
  const double x = std::abs(z - zp);
  const double xp = z + zp + wg.length_L;
  const double d_min = std::min(std::min(x, 2.0 * wg.length_L - x),
                                std::min(xp, 2.0 * wg.length_L - xp));
  const double nu = wg.omega_c * d_min / wg.speed_c;
  double lambda_star = lambda_max;
  if (nu > 0.0) {
    lambda_star = std::min(lambda_max, std::acosh(1.0 + 30.0 / nu));
  }
  QuadratureResult q = integrate_adaptive(integrand, 0.0, lambda_star, 5e-9);
  if (lambda_star < lambda_max) {
    const QuadratureResult tail =
        integrate_adaptive(integrand, lambda_star, lambda_max, 5e-9);
    q.value += tail.value;
    q.abs_error += tail.abs_error;
    q.evaluations += tail.evaluations;
  }

  BranchCutResult result;
  result.value = complexd(q.value, 0.0);
  result.abs_error = q.abs_error;
  if (z == zp) {
    const complexd w = evanescent_scale(wg, complexd(omega, 0.0));
    result.closed_form = -(1.0 / pi) * std::log(2.0 * omega_hf / wg.omega_c) +
                         (omega / w) * (1.0 / pi) * std::asin(w / wg.omega_c);
  }
  return result;
}

}  // namespace wgqed
