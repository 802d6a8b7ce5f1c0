#pragma once

#include <cstddef>

#include "wgqed/greens_provider.hpp"
#include "wgqed/model.hpp"

namespace wgqed {

struct PurcellResult {
  double gamma_r = 0.0;  // radiative rate through the ports, rad/s
  long n_modes = 0;      // -1 marks the infinite-sum closed form
  double omega_b = 0.0;  // rad/s
};

inline constexpr long purcell_infinite_marker = -1;

// Gamma_r = 2Z (gamma L/c) sum_s Gamma_s |cG0(z1, z_s; omega_b)|^2 with the
// provider's propagator and its derivative-based Z.
PurcellResult purcell_infinite(const SystemSpec& system,
                               const GreensProvider& provider, double omega_b,
                               std::size_t qubit_index = 0);

// Same rate with the propagator truncated to the first n_modes resonances.
// Z uses the analytic derivative of the same truncated sum, so the formula
// stays internally consistent at any truncation.
PurcellResult purcell_finite(const SystemSpec& system, double omega_b,
                             long n_modes, std::size_t qubit_index = 0);

// Single-resonance limits: unregularized g~^2 kappa / (eps_1 - omega_b)^2,
// regularized g~^2 kappa / ((eps_1 - omega_b)^2 + g~^2) which saturates at
// the cavity decay rate kappa on resonance.
PurcellResult purcell_single_mode(const SystemSpec& system, double omega_b,
                                  bool regularized,
                                  std::size_t qubit_index = 0);

// kappa = sum_s 2 Gamma_s |sqrt(L) psi_1(z_s)|^2, the decay rate of the
// fundamental resonance through both ports.
double cavity_kappa(const SystemSpec& system);

}  // namespace wgqed
