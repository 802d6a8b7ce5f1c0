#include "wgqed/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "wgqed/parallel.hpp"
#include "wgqed/scattering.hpp"

namespace wgqed {

namespace {

constexpr double pi = 3.14159265358979323846;

struct BlochParams {
  double delta_d;
  double gamma_b;
  double rabi;
  double tau_p;
};

struct Derivative {
  complexd ds;
  double dz;
};

// Rotating-frame equations of motion; the drive is a rectangular pulse that
// switches off at tau_p.
Derivative rhs(const BlochParams& p, double t, complexd s, double z) {
  const double drive = t < p.tau_p ? p.rabi : 0.0;
  const complexd rate(0.0, 1.0);
  Derivative d;
  d.ds = rate * complexd(p.delta_d, 0.5 * p.gamma_b) * s +
         rate * 0.5 * drive * z;
  // conj(s) - s = -2i Im(s), so the z equation stays real.
  d.dz = -p.gamma_b * (1.0 + z) - 2.0 * drive * s.imag();
  return d;
}

void rk4_step(const BlochParams& p, double t, double h, complexd& s,
              double& z) {
  const Derivative k1 = rhs(p, t, s, z);
  const Derivative k2 =
      rhs(p, t + 0.5 * h, s + 0.5 * h * k1.ds, z + 0.5 * h * k1.dz);
  const Derivative k3 =
      rhs(p, t + 0.5 * h, s + 0.5 * h * k2.ds, z + 0.5 * h * k2.dz);
  const Derivative k4 = rhs(p, t + h, s + h * k3.ds, z + h * k3.dz);
  s += h / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
  z += h / 6.0 * (k1.dz + 2.0 * k2.dz + 2.0 * k3.dz + k4.dz);
}

double max_rate(const BlochParams& p) {
  return std::max({p.rabi, p.gamma_b, std::abs(p.delta_d)});
}

void check_drive(const DriveSpec& drive) {
  if (!(drive.pulse_len_tau > 0.0)) {
    throw std::invalid_argument("simulate_bloch: pulse_len_tau must be > 0");
  }
  if (drive.rabi_Omega < 0.0) {
    throw std::invalid_argument("simulate_bloch: rabi_Omega must be >= 0");
  }
}

}  // namespace

BlochTrace simulate_bloch(const BoundStateResult& bound,
                          const DriveSpec& drive, double t_end, double dt) {
  check_drive(drive);
  if (!(dt > 0.0) || !(t_end >= 0.0)) {
    throw std::invalid_argument("simulate_bloch: need dt > 0 and t_end >= 0");
  }
  const BlochParams p{detuning_delta_d(drive, bound), bound.gamma_b,
                      drive.rabi_Omega, drive.pulse_len_tau};
  const double rate = max_rate(p);
  if (rate > 0.0 && dt > 1.0 / (50.0 * rate)) {
    throw std::invalid_argument(
        "simulate_bloch: dt violates the step bound 1/(50 max(Omega, "
        "Gamma_b, |delta_d|))");
  }

  const long n_steps = static_cast<long>(std::floor(t_end / dt + 1e-9));
  BlochTrace trace;
  trace.t.reserve(n_steps + 1);
  trace.states.reserve(n_steps + 1);
  trace.emission.reserve(n_steps + 1);

  complexd s(0.0, 0.0);
  double z = -1.0;
  for (long i = 0; i <= n_steps; ++i) {
    const double t = dt * static_cast<double>(i);
    trace.t.push_back(t);
    trace.states.push_back({s, z});
    trace.emission.push_back(std::abs(s));
    if (i < n_steps) rk4_step(p, t, dt, s, z);
  }
  return trace;
}

double steady_state_magnitude(double gamma_b, double rabi_Omega,
                              double delta_d) {
  if (!(gamma_b > 0.0)) {
    throw std::domain_error("steady_state_magnitude: requires gamma_b > 0");
  }
  if (rabi_Omega == 0.0) return 0.0;
  const double d2 = 4.0 * delta_d * delta_d + gamma_b * gamma_b;
  return rabi_Omega * std::sqrt(d2) /
         (2.0 * rabi_Omega * rabi_Omega + d2);
}

ChevronMap chevron_map(const BoundStateResult& bound, double rabi_Omega,
                       double tau_p, const std::vector<double>& omega_d_grid,
                       const std::vector<double>& t_grid) {
  if (omega_d_grid.empty() || t_grid.empty()) {
    throw std::invalid_argument("chevron_map: empty grid");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw std::invalid_argument(
          "chevron_map: t_grid must be strictly increasing");
    }
  }
  if (!(t_grid.front() >= 0.0)) {
    throw std::invalid_argument("chevron_map: t_grid must start at t >= 0");
  }

  ChevronMap map;
  map.omega_d = omega_d_grid;
  map.t = t_grid;
  map.emission.assign(omega_d_grid.size(),
                      std::vector<double>(t_grid.size(), 0.0));

  parallel_for(omega_d_grid.size(), [&](std::size_t row) {
    const BlochParams p{omega_d_grid[row] - bound.omega_b, bound.gamma_b,
                        rabi_Omega, tau_p};
    const double rate = max_rate(p);
    const double dt_req =
        rate > 0.0 ? 1.0 / (50.0 * rate) : t_grid.back() + 1.0;

    complexd s(0.0, 0.0);
    double z = -1.0;
    double t = 0.0;
    // March segment by segment (0 -> t0 -> t1 ...), substepping each
    // segment to honor the RK4 step bound regardless of grid spacing.
    for (std::size_t col = 0; col < t_grid.size(); ++col) {
      const double seg = t_grid[col] - t;
      if (seg > 0.0) {
        const long n_sub =
            std::max(1L, static_cast<long>(std::ceil(seg / dt_req)));
        const double h = seg / static_cast<double>(n_sub);
        for (long k = 0; k < n_sub; ++k) {
          rk4_step(p, t, h, s, z);
          t += h;
        }
        t = t_grid[col];  // absorb roundoff drift from the substeps
      }
      map.emission[row][col] = std::abs(s);
    }
  });
  return map;
}

double emission_prefactor(const SystemSpec& system,
                          const GreensProvider& provider,
                          const BoundStateResult& bound,
                          std::size_t qubit_index) {
  if (qubit_index >= system.qubits.size()) {
    throw std::out_of_range("emission_prefactor: qubit index out of range");
  }
  const QubitSpec& qb = system.qubits[qubit_index];
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  const complexd green = gp(system, provider, system.port_right.position_z,
                            qb.position_z, bound.omega_b);
  return 2.0 * qb.g * std::sqrt(pi * system.port_right.gamma) * Lc *
         std::abs(green);
}

}  // namespace wgqed
