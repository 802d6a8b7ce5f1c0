#include "wgqed/boundstate.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "wgqed/errors.hpp"

namespace wgqed {

namespace {

const QubitSpec& qubit_at(const SystemSpec& system, std::size_t idx,
                          const char* op) {
  if (idx >= system.qubits.size()) {
    throw std::out_of_range(std::string(op) + ": qubit index " +
                            std::to_string(idx) + " out of range");
  }
  return system.qubits[idx];
}

}  // namespace

BoundStateResult solve_bound_state(const SystemSpec& system,
                                   const GreensProvider& provider,
                                   std::size_t qubit_index) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "solve_bound_state");
  const WaveguideSpec& wg = system.waveguide;
  const double gamma = gamma_eff(system, qubit_index);
  const double z1 = qb.position_z;

  auto residual = [&](double omega) {
    return omega - qb.omega_q - gamma * provider(z1, z1, omega).real();
  };

  // The self-energy pulls the root below omega_q and diverges toward the
  // band edge, so a sign change inside this bracket is the existence test.
  double lo = 1e-3 * wg.omega_c;
  double hi = wg.omega_c * (1.0 - 1e-6);
  double f_lo = residual(lo);
  double f_hi = residual(hi);
  if (f_lo == 0.0) hi = lo;
  if ((f_lo > 0.0) == (f_hi > 0.0) && f_lo != 0.0 && f_hi != 0.0) {
    throw NoBoundStateError(f_lo, f_hi);
  }

  while (hi - lo > 1e-12 * (0.5 * (hi + lo))) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  double omega_b = 0.5 * (lo + hi);
  // One secant step cleans up the last bisection digits.
  if (hi > lo && f_hi != f_lo) {
    const double secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    if (secant > 0.0 && secant < wg.omega_c) omega_b = secant;
  }

  BoundStateResult result;
  result.omega_b = omega_b;
  result.Z = quasiparticle_weight(system, provider, omega_b, qubit_index);
  result.gamma_b =
      bound_linewidth(system, provider, omega_b, result.Z, qubit_index);
  result.xi = localization_length(wg, omega_b);
  if (result.gamma_b > 0.0) {
    result.amplitude_A =
        resonance_amplitude(system, provider, result, qubit_index);
  } else {
    // Gamma_b = 0 means the state is fully dark; there is no transmission
    // resonance to carry an amplitude.
    result.amplitude_A = 0.0;
  }
  return result;
}

double quasiparticle_weight(const SystemSpec& system,
                            const GreensProvider& provider, double omega_b,
                            std::size_t qubit_index, double rel_step) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "quasiparticle_weight");
  const WaveguideSpec& wg = system.waveguide;
  const double gamma = gamma_eff(system, qubit_index);
  if (gamma == 0.0) return 1.0;
  if (!(rel_step > 0.0) || rel_step >= 1.0) {
    throw std::invalid_argument(
        "quasiparticle_weight: rel_step must lie in (0, 1)");
  }

  // Re G0 has a kink at the band edge; the stencil must not straddle it.
  double h = rel_step * wg.omega_c;
  const double edge_gap = std::abs(wg.omega_c - omega_b);
  if (h >= edge_gap && edge_gap > 0.0) {
    h = 0.45 * edge_gap;
    std::clog << "wgqed: quasiparticle_weight: derivative step clamped to "
              << h << " rad/s against the band edge; result is "
              << "ill-conditioned this close to cutoff\n";
  }
  const double z1 = qb.position_z;
  const double d_re = (provider(z1, z1, omega_b + h).real() -
                       provider(z1, z1, omega_b - h).real()) /
                      (2.0 * h);
  return 1.0 / (1.0 - gamma * d_re);
}

double quasiparticle_weight_closed(const SystemSpec& system, double omega_b,
                                   std::size_t qubit_index) {
  qubit_at(system, qubit_index, "quasiparticle_weight_closed");
  const WaveguideSpec& wg = system.waveguide;
  if (omega_b >= wg.omega_c) {
    throw std::domain_error(
        "quasiparticle_weight_closed: omega_b must lie below cutoff");
  }
  const double gamma = gamma_eff(system, qubit_index);
  const double wc2 = wg.omega_c * wg.omega_c;
  const double gap = wc2 - omega_b * omega_b;
  return 1.0 / (1.0 + gamma * wc2 / (gap * std::sqrt(gap)));
}

BoundLinewidthParts bound_linewidth_parts(const SystemSpec& system,
                                          const GreensProvider& provider,
                                          double omega_b, double Z,
                                          std::size_t qubit_index) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "bound_linewidth");
  const double gamma = gamma_eff(system, qubit_index);
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  const double z1 = qb.position_z;

  double radiative_sum = 0.0;
  for (const PortSpec* port : {&system.port_left, &system.port_right}) {
    if (port->gamma == 0.0) continue;
    radiative_sum +=
        port->gamma * std::norm(provider(z1, port->position_z, omega_b));
  }

  BoundLinewidthParts parts;
  parts.nonradiative = Z * qb.gamma_a;
  parts.radiative = 2.0 * Z * gamma * Lc * radiative_sum;
  parts.total = parts.nonradiative + parts.radiative;
  return parts;
}

double bound_linewidth(const SystemSpec& system, const GreensProvider& provider,
                       double omega_b, double Z, std::size_t qubit_index) {
  return bound_linewidth_parts(system, provider, omega_b, Z, qubit_index)
      .total;
}

double resonance_amplitude(const SystemSpec& system,
                           const GreensProvider& provider,
                           const BoundStateResult& bound,
                           std::size_t qubit_index) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "resonance_amplitude");
  if (!(bound.gamma_b > 0.0)) {
    throw std::domain_error("resonance_amplitude: requires gamma_b > 0");
  }
  const double gamma = gamma_eff(system, qubit_index);
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  const double amp = std::sqrt(system.port_left.gamma *
                               system.port_right.gamma);
  const complexd g_R =
      provider(qb.position_z, system.port_right.position_z, bound.omega_b);
  const complexd g_L =
      provider(qb.position_z, system.port_left.position_z, bound.omega_b);
  const complexd peak =
      4.0 * bound.Z * (amp / bound.gamma_b) * gamma * Lc * g_R * g_L;
  return std::norm(peak);
}

std::function<double(double)> resonance_profile(const BoundStateResult& bound) {
  const double A = bound.amplitude_A;
  const double omega_b = bound.omega_b;
  const double half = 0.5 * bound.gamma_b;
  return [A, omega_b, half](double omega) {
    const double det = omega - omega_b;
    return A * half * half / (det * det + half * half);
  };
}

PhotonicWavefunction photonic_wavefunction(const SystemSpec& system,
                                           const GreensProvider& provider,
                                           const BoundStateResult& bound,
                                           const std::vector<double>& z_grid,
                                           std::size_t qubit_index) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "photonic_wavefunction");
  for (std::size_t i = 1; i < z_grid.size(); ++i) {
    if (!(z_grid[i] > z_grid[i - 1])) {
      throw std::invalid_argument(
          "photonic_wavefunction: z_grid must be strictly increasing");
    }
  }
  const WaveguideSpec& wg = system.waveguide;
  // |psi(z)|^2 = L g^2 Z |G0(z, z1)|^2 with G0 = (c G0)/c from the provider.
  const double factor = wg.length_L * qb.g * qb.g * bound.Z /
                        (wg.speed_c * wg.speed_c);

  PhotonicWavefunction out;
  out.density.resize(z_grid.size());
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    out.density[i] =
        factor * std::norm(provider(z_grid[i], qb.position_z, bound.omega_b));
  }
  for (std::size_t i = 1; i < z_grid.size(); ++i) {
    out.integral += 0.5 * (out.density[i] + out.density[i - 1]) *
                    (z_grid[i] - z_grid[i - 1]);
  }
  return out;
}

double localization_length(const WaveguideSpec& wg, double omega_b) {
  if (omega_b >= wg.omega_c) {
    throw std::domain_error(
        "localization_length: omega_b must lie below cutoff");
  }
  return wg.speed_c /
         std::sqrt(wg.omega_c * wg.omega_c - omega_b * omega_b);
}

}  // namespace wgqed
