#pragma once

#include <complex>
#include <optional>

#include "wgqed/model.hpp"

namespace wgqed {

using complexd = std::complex<double>;

// Discrete mode basis of the mirrored section: k_l = l*pi/L, l = 1, 2, ...
double mode_wavenumber(const WaveguideSpec& wg, long l);
// eps_l = sqrt(c^2 k_l^2 + omega_c^2)
double mode_frequency(const WaveguideSpec& wg, long l);
// psi_l(z) = sqrt(2/L) sin(k_l (z + L/2)), vanishing at both mirrors
double mode_amplitude(const WaveguideSpec& wg, long l, double z);

// omega -> omega + i*eta*omega_c.  The small imaginary shift keeps mode
// denominators away from the real axis; eta = 0 recovers the bare value.
complexd regularized_omega(const WaveguideSpec& wg, double omega);

// wbar = sqrt(omega_c^2 - omega^2) with the root pushed into the fourth
// quadrant (Re >= 0, Im <= 0), the retarded branch: decaying in the stopband,
// outgoing (-i k c) in the passband.
complexd evanescent_scale(const WaveguideSpec& wg, complexd omega);

// Image-summed envelope of the mirrored propagator at decay rate w per unit
// speed.  Written with strictly negative exponents so it stays finite for any
// Re(w) >= 0 and vanishes linearly as w -> 0:
//   x = |z - z'|, x' = z + z' + L, denominator 1 - exp(-2Lw/c).
complexd image_kernel(const WaveguideSpec& wg, double z, double zp, complexd w);

// c * G0(z, z'; omega) as a truncated sum over the first n_modes modes.
// include_fk weights each term by f_l^2 = eps_l / omega_c, a diagnostic
// variant of the coupling envelope; the default leaves the weight at 1.
complexd g0_truncated(const WaveguideSpec& wg, double z, double zp,
                      double omega, long n_modes, bool include_fk = false);

// Pole part of c * G0 in closed form: (omega / wbar) * F(z, z'; wbar).
complexd g0_pole(const WaveguideSpec& wg, double z, double zp, double omega);

// Long-waveguide limit of the pole part, valid deep in the stopband where
// mirror images beyond the direct one are negligible:
//   -(omega / wbar) * exp(-wbar |z - z'| / c).
complexd g0_long(const WaveguideSpec& wg, double z, double zp, double omega);

// Single-resonance approximation keeping only the l = 1 mode.  Equals
// g0_truncated with n_modes = 1 by construction.
complexd g0_single_mode(const WaveguideSpec& wg, double z, double zp,
                        double omega);

struct BranchCutResult {
  complexd value;                       // c * G0 branch-cut contribution
  double abs_error = 0.0;               // quadrature error estimate
  std::optional<complexd> closed_form;  // available only at z == z'
};

// Branch-cut contribution to c * G0, integrated from the band edge up to the
// high-frequency cutoff omega_hf.  Diagnostic companion to g0_pole: the two
// together reproduce the converged mode sum.  Coincident points also get the
// closed-form value for cross-checking.
BranchCutResult g0_branchcut(const WaveguideSpec& wg, double z, double zp,
                             double omega, double omega_hf);

}  // namespace wgqed
