#pragma once

#include <string>
#include <vector>

#include "wgqed/boundstate.hpp"
#include "wgqed/greens_provider.hpp"
#include "wgqed/model.hpp"

namespace wgqed {

enum class SplittingMethod {
  determinant,
  self_consistent,
  linear,
  long_waveguide,
  single_mode,
  overlap,
};

const char* to_string(SplittingMethod method);

struct SplittingResult {
  double omega_bar_b = 0.0;  // midpoint of the two bound levels, rad/s
  double delta = 0.0;        // splitting omega_b2 - omega_b1 >= 0, rad/s
  double J = 0.0;            // exchange strength per method, rad/s
  SplittingMethod method = SplittingMethod::determinant;
};

// Both stopband roots of det[Ghat(omega)]^-1 = 0 with gamma_a forced to 0,
// located by dense scan plus bisection.  Throws DegenerateConfigError when
// fewer than two roots exist (e.g. one qubit decoupled).
SplittingResult solve_pair_determinant(const SystemSpec& system,
                                       const GreensProvider& provider);

// Fixed point of Delta = Sigma_-(omega_bar + Delta/2) -
// Sigma_+(omega_bar - Delta/2) for the symmetric pair, started at Delta = 0,
// relative tolerance 1e-10, at most 200 sweeps.
double splitting_selfconsistent(const SystemSpec& system,
                                const GreensProvider& provider,
                                double omega_bar_b);

// Linearized exchange J = -2 Sigma_12(omega_bar_b) * Z(omega_bar_b) with the
// bare cross self-energy.
double j_linear(const SystemSpec& system, const GreensProvider& provider,
                double omega_bar_b);

// Long-waveguide closed form
//   J = 2 gamma (omega_bar xi / c) exp(-d/xi) / (1 + gamma omega_c^2 xi^3/c^3)
// for qubit separation d.  Warns when L is not >> xi.
double j_long_waveguide(const WaveguideSpec& wg, double gamma, double d,
                        double omega_bar_b);

// Single-resonance exchange J = 2 Z g1~ g2~ / (eps_1 - omega_bar), with
// gj~ = g_j sqrt(L) psi_1(z_j) and Z = 1/(1 + g~^2/(eps_1 - omega_bar)^2).
double j_single_mode(const SystemSpec& system, double omega_bar_b);
double single_mode_gtilde(const SystemSpec& system, std::size_t qubit_index);
double single_mode_weight(const SystemSpec& system, double omega_bar_b);

// Wavefunction-overlap route 2|Z * Sigma_12(omega_bar_b)|, algebraically
// identical to j_linear.  The grid only sets the resolution check (spacing
// should stay below xi/50 for the overlap picture to be meaningful).
double j_overlap(const SystemSpec& system, const GreensProvider& provider,
                 double omega_bar_b, const std::vector<double>& z_grid);

struct AvoidedCrossingMap {
  std::vector<double> omega_q2;              // column coordinate, rad/s
  std::vector<double> omega;                 // row coordinate (drive), rad/s
  std::vector<std::vector<double>> power;    // |S_RL|^2, power[row][col]
  double extracted_J = 0.0;                  // minimal peak separation, rad/s
  double omega_q2_at_min = 0.0;              // where the gap closes tightest
};

// Two-qubit transmission map over (drive frequency) x (second qubit
// frequency), plus the measured exchange as the minimal two-peak distance
// across columns with quadratic sub-grid refinement.
AvoidedCrossingMap avoided_crossing_map(const SystemSpec& system,
                                        const GreensProvider& provider,
                                        const std::vector<double>& omega_q2_grid,
                                        const std::vector<double>& f_grid);

}  // namespace wgqed
