#include "wgqed/purcell.hpp"

#include <cmath>
#include <stdexcept>

#include "wgqed/boundstate.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/greens_continuum.hpp"

namespace wgqed {

namespace {

constexpr double pi = 3.14159265358979323846;

const QubitSpec& qubit_at(const SystemSpec& system, std::size_t idx,
                          const char* op) {
  if (idx >= system.qubits.size()) {
    throw std::out_of_range(std::string(op) + ": qubit index " +
                            std::to_string(idx) + " out of range");
  }
  return system.qubits[idx];
}

double fundamental_weight(const WaveguideSpec& wg, double z) {
  // |sqrt(L) psi_1(z)|^2 = 2 sin^2(pi (z + L/2)/L)
  const double s = std::sin(pi * (z + 0.5 * wg.length_L) / wg.length_L);
  return 2.0 * s * s;
}

}  // namespace

PurcellResult purcell_infinite(const SystemSpec& system,
                               const GreensProvider& provider, double omega_b,
                               std::size_t qubit_index) {
  qubit_at(system, qubit_index, "purcell_infinite");
  const double Z =
      quasiparticle_weight(system, provider, omega_b, qubit_index);
  const BoundLinewidthParts parts =
      bound_linewidth_parts(system, provider, omega_b, Z, qubit_index);
  return {parts.radiative, purcell_infinite_marker, omega_b};
}

PurcellResult purcell_finite(const SystemSpec& system, double omega_b,
                             long n_modes, std::size_t qubit_index) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "purcell_finite");
  if (n_modes < 1) {
    throw std::invalid_argument("purcell_finite: n_modes must be >= 1");
  }
  const WaveguideSpec& wg = system.waveguide;
  const double gamma = gamma_eff(system, qubit_index);
  const double Lc = wg.length_L / wg.speed_c;
  const double norm = 2.0 / wg.length_L;
  const double u1 = (qb.position_z + 0.5 * wg.length_L) / wg.length_L;
  const double uL =
      (system.port_left.position_z + 0.5 * wg.length_L) / wg.length_L;
  const double uR =
      (system.port_right.position_z + 0.5 * wg.length_L) / wg.length_L;

  // One pass accumulates the truncated propagator to each port and the
  // matching truncated derivative that defines this truncation's Z.
  double sum_L = 0.0;
  double sum_R = 0.0;
  double dsum = 0.0;
  for (long l = 1; l <= n_modes; ++l) {
    const double lp = static_cast<double>(l) * pi;
    const double eps_l =
        std::hypot(wg.speed_c * lp / wg.length_L, wg.omega_c);
    const double det = omega_b - eps_l;
    if (det == 0.0) {
      throw NumericalError("purcell_finite",
                           "omega_b coincides with retained mode " +
                               std::to_string(l));
    }
    const double s1 = std::sin(lp * u1);
    sum_L += norm * s1 * std::sin(lp * uL) / det;
    sum_R += norm * s1 * std::sin(lp * uR) / det;
    dsum += norm * s1 * s1 / (det * det);
  }
  const double Z = 1.0 / (1.0 + gamma * wg.speed_c * dsum);

  double radiative = 0.0;
  const double cg_L = wg.speed_c * sum_L;
  const double cg_R = wg.speed_c * sum_R;
  radiative += system.port_left.gamma * cg_L * cg_L;
  radiative += system.port_right.gamma * cg_R * cg_R;
  return {2.0 * Z * gamma * Lc * radiative, n_modes, omega_b};
}

PurcellResult purcell_single_mode(const SystemSpec& system, double omega_b,
                                  bool regularized,
                                  std::size_t qubit_index) {
  const QubitSpec& qb = qubit_at(system, qubit_index, "purcell_single_mode");
  const WaveguideSpec& wg = system.waveguide;
  const double eps_1 = mode_frequency(wg, 1);
  const double det = eps_1 - omega_b;
  const double gt2 =
      qb.g * qb.g * fundamental_weight(wg, qb.position_z);
  const double kappa = cavity_kappa(system);

  double rate;
  if (regularized) {
    rate = gt2 * kappa / (det * det + gt2);
  } else {
    if (det == 0.0) {
      throw NumericalError(
          "purcell_single_mode",
          "unregularized variant diverges on the fundamental resonance");
    }
    rate = gt2 * kappa / (det * det);
  }
  return {rate, 1, omega_b};
}

double cavity_kappa(const SystemSpec& system) {
  const WaveguideSpec& wg = system.waveguide;
  double kappa = 0.0;
  for (const PortSpec* port : {&system.port_left, &system.port_right}) {
    kappa += 2.0 * port->gamma * fundamental_weight(wg, port->position_z);
  }
  return kappa;
}

}  // namespace wgqed
