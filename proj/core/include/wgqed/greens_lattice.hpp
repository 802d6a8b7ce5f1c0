#pragma once

#include <complex>

namespace wgqed {

using complexd = std::complex<double>;

// Tight-binding chain of N coupled cavities with open ends.  Band
// eps_l = omega_c + 2t - 2t cos(k_l a), k_l = l*pi/L, L = (N+1)a; the band
// bottom sits at omega_c.
struct LatticeSpec {
  long n_sites = 0;        // N
  double hopping_t = 0.0;  // rad/s
  double lattice_a = 0.0;  // m
  double omega_c = 0.0;    // band bottom, rad/s
};

void validate(const LatticeSpec& lat);

// L = (N+1) a
double lattice_length(const LatticeSpec& lat);

double lattice_mode_frequency(const LatticeSpec& lat, long l);
// sqrt(2/L) sin(k_l n a): the continuum normalization, so mode sums carry
// the same 1/(m * rad/s) units as the continuum Green's function.
double lattice_mode_amplitude(const LatticeSpec& lat, long l, long site);

// Exact finite mode sum G(n, n'; omega) over all N chain modes, with the
// same eta-regularization omega -> omega + i*eta*omega_c as the continuum.
complexd lattice_g0(const LatticeSpec& lat, long site_n, long site_np,
                    double omega, double eta = 1e-6);

// Infinite-chain lattice integral at below-band detuning delta = omega_c -
// omega > 0:
//   I(nbar) = -(1/(a sqrt((4t+delta) delta)))
//             * ( 2t / (2t + delta + sqrt((4t+delta) delta)) )^nbar
double lattice_I(const LatticeSpec& lat, long n_bar, double delta);

// Broad-bandwidth limit 4t >> delta of I restricted to the relative
// coordinate: -exp(-|n - n'| sqrt(delta/t)) / (a sqrt(4 t delta)).
// Warns when 4t <= 20*delta, where the expansion degrades.
double lattice_g0_broadband(const LatticeSpec& lat, long site_n, long site_np,
                            double delta);

// Band-bottom effective mass 1/(2 t a^2).  Matching it to omega_c/c^2
// recovers the continuum dispersion near cutoff.
double lattice_effective_mass(const LatticeSpec& lat);

}  // namespace wgqed
