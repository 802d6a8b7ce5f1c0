#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "wgqed/boundstate.hpp"
#include "wgqed/greens_provider.hpp"
#include "wgqed/model.hpp"

namespace wgqed {

// Rectangular drive pulse on the bound-state transition: on for t < tau_p,
// off after.
struct DriveSpec {
  double omega_d = 0.0;        // drive frequency, rad/s
  double rabi_Omega = 0.0;     // Rabi rate, rad/s
  double pulse_len_tau = 0.0;  // s
};

inline double detuning_delta_d(const DriveSpec& drive,
                               const BoundStateResult& bound) {
  return drive.omega_d - bound.omega_b;
}

struct BlochState {
  complexd sigma_minus{0.0, 0.0};
  double sigma_z = -1.0;
};

struct BlochTrace {
  std::vector<double> t;           // s, strictly increasing
  std::vector<BlochState> states;
  std::vector<double> emission;    // |<sigma_minus>| per step
};

// Rotating-frame Bloch equations at detuning delta_d = omega_d - omega_b,
// linewidth Gamma_b from `bound`, integrated with fixed-step RK4 from the
// ground state.  dt must satisfy dt <= 1/(50 max(Omega_r, Gamma_b, |delta_d|)).
BlochTrace simulate_bloch(const BoundStateResult& bound, const DriveSpec& drive,
                          double t_end, double dt);

// |<sigma_minus>|_ss = Omega_r sqrt(4 delta_d^2 + Gamma_b^2) /
//                      (2 Omega_r^2 + 4 delta_d^2 + Gamma_b^2)
double steady_state_magnitude(double gamma_b, double rabi_Omega,
                              double delta_d);

struct ChevronMap {
  std::vector<double> omega_d;  // row coordinate, rad/s
  std::vector<double> t;        // column coordinate, s
  // emission[row][col]: |<sigma_minus>| for drive omega_d[row] at t[col]
  std::vector<std::vector<double>> emission;
};

// One Bloch trace per drive frequency, sampled on t_grid (uniform, strictly
// increasing; integration substeps internally to meet the RK4 step bound).
ChevronMap chevron_map(const BoundStateResult& bound, double rabi_Omega,
                       double tau_p, const std::vector<double>& omega_d_grid,
                       const std::vector<double>& t_grid);

// Scale between |<sigma_minus>| and the detected field amplitude,
// 2 g1 sqrt(pi Gamma_R) (L/c) |cG(p)(z_R, z1; omega_b)|.  Reported separately
// so traces remain comparable shape-wise without it.
double emission_prefactor(const SystemSpec& system,
                          const GreensProvider& provider,
                          const BoundStateResult& bound,
                          std::size_t qubit_index = 0);

}  // namespace wgqed
