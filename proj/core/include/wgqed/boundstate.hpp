#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wgqed/greens_provider.hpp"
#include "wgqed/model.hpp"

namespace wgqed {

struct BoundStateResult {
  double omega_b = 0.0;      // rad/s, below cutoff
  double Z = 0.0;            // quasiparticle weight in (0, 1]
  double gamma_b = 0.0;      // total linewidth, rad/s
  double amplitude_A = 0.0;  // |S_RL(omega_b)|^2 at the resonance peak
  double xi = 0.0;           // localization length, m
};

// Root of omega - omega_q - gamma * Re cG0(z1, z1; omega) on the stopband
// bracket (1e-3 omega_c, omega_c(1 - 1e-6)): bisection to 1e-12 relative
// followed by one secant polish.  Throws NoBoundStateError when the residual
// does not change sign across the bracket.
BoundStateResult solve_bound_state(const SystemSpec& system,
                                   const GreensProvider& provider,
                                   std::size_t qubit_index = 0);

// Z = 1 / (1 - gamma * d/domega Re cG0(z1, z1; omega))|_{omega_b}, central
// difference with step rel_step * omega_c. The default step balances
// truncation against roundoff for generic providers; shrink it when the
// comparison target demands a smaller (step / detuning)^2 truncation error.
double quasiparticle_weight(const SystemSpec& system,
                            const GreensProvider& provider, double omega_b,
                            std::size_t qubit_index = 0, double rel_step = 1e-7);

// Long-waveguide closed form Z = 1 / (1 + gamma omega_c^2 /
// (omega_c^2 - omega_b^2)^{3/2}).
double quasiparticle_weight_closed(const SystemSpec& system, double omega_b,
                                   std::size_t qubit_index = 0);

struct BoundLinewidthParts {
  double total = 0.0;
  double nonradiative = 0.0;  // 2Z * gamma_a/2
  double radiative = 0.0;     // Purcell leakage through the ports
};

// Gamma_b = 2Z [gamma_a/2 + (gamma L/c) sum_s Gamma_s |cG0(z1, z_s)|^2].
double bound_linewidth(const SystemSpec& system, const GreensProvider& provider,
                       double omega_b, double Z, std::size_t qubit_index = 0);
BoundLinewidthParts bound_linewidth_parts(const SystemSpec& system,
                                          const GreensProvider& provider,
                                          double omega_b, double Z,
                                          std::size_t qubit_index = 0);

// Peak transmission power at the bound-state resonance,
// A = |4Z sqrt(Gamma_R Gamma_L)/Gamma_b * (gamma L/c) cG0(z1,zR) cG0(z1,zL)|^2.
double resonance_amplitude(const SystemSpec& system,
                           const GreensProvider& provider,
                           const BoundStateResult& bound,
                           std::size_t qubit_index = 0);

// Lorentzian |S_RL|^2 profile through the resonance, callable at any omega.
std::function<double(double)> resonance_profile(const BoundStateResult& bound);

struct PhotonicWavefunction {
  std::vector<double> density;  // |psi_phot(z)|^2 on the grid, 1/m
  double integral = 0.0;        // trapezoid over the supplied grid
};

// |psi_phot(z)|^2 = L g^2 Z |G0(z, z1; omega_b)|^2.  The integral equals the
// total photonic weight 1 - Z when the grid spans the full waveguide densely.
PhotonicWavefunction photonic_wavefunction(const SystemSpec& system,
                                           const GreensProvider& provider,
                                           const BoundStateResult& bound,
                                           const std::vector<double>& z_grid,
                                           std::size_t qubit_index = 0);

// xi = c / sqrt(omega_c^2 - omega_b^2); diverges at the band edge.
double localization_length(const WaveguideSpec& wg, double omega_b);

}  // namespace wgqed
