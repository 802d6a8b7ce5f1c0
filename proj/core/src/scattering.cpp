#include "wgqed/scattering.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wgqed/errors.hpp"
#include "wgqed/parallel.hpp"

namespace wgqed {

namespace {

constexpr complexd I(0.0, 1.0);

// Port couplings in the dimensionless combination Gamma_s * L / c that pairs
// with c*G0 everywhere.
struct PortWeights {
  double lam_L;
  double lam_R;
  double z_L;
  double z_R;
};

PortWeights port_weights(const SystemSpec& system) {
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  return {system.port_left.gamma * Lc, system.port_right.gamma * Lc,
          system.port_left.position_z, system.port_right.position_z};
}

complexd pair_determinant(const PortWeights& p, complexd g_RR, complexd g_LL,
                          complexd g_RL, complexd g_LR) {
  return (1.0 + I * p.lam_R * g_RR) * (1.0 + I * p.lam_L * g_LL) +
         p.lam_R * p.lam_L * g_RL * g_LR;
}

}  // namespace

complexd gp(const SystemSpec& system, const GreensProvider& provider, double z,
            double zp, double omega) {
  const PortWeights p = port_weights(system);
  const complexd g_zzp = provider(z, zp, omega);
  if (p.lam_L == 0.0 && p.lam_R == 0.0) return g_zzp;

  const complexd g_RR = provider(p.z_R, p.z_R, omega);
  const complexd g_LL = provider(p.z_L, p.z_L, omega);
  const complexd g_RL = provider(p.z_R, p.z_L, omega);
  const complexd g_zR = provider(z, p.z_R, omega);
  const complexd g_zL = provider(z, p.z_L, omega);
  const complexd g_Rzp = provider(p.z_R, zp, omega);
  const complexd g_Lzp = provider(p.z_L, zp, omega);

  const complexd D = pair_determinant(p, g_RR, g_LL, g_RL, g_RL);
  if (std::abs(D) < 1e-30) {
    throw NumericalError("gp", "singular port-dressing denominator");
  }

  // Two-scatterer resummation: single-port chains carry the opposite port's
  // diagonal correction in the numerator, double chains the cross passes.
  const complexd single_R =
      -I * p.lam_R * g_zR * g_Rzp * (1.0 + I * p.lam_L * g_LL);
  const complexd single_L =
      -I * p.lam_L * g_zL * g_Lzp * (1.0 + I * p.lam_R * g_RR);
  const complexd cross = -p.lam_R * p.lam_L *
                         (g_zR * g_RL * g_Lzp + g_zL * g_RL * g_Rzp);
  return g_zzp + (single_R + single_L + cross) / D;
}

complexd gp_weak(const SystemSpec& system, const GreensProvider& provider,
                 double z, double zp, double omega) {
  const PortWeights p = port_weights(system);
  complexd value = provider(z, zp, omega);
  if (p.lam_R != 0.0) {
    value -= I * p.lam_R * provider(z, p.z_R, omega) *
             provider(p.z_R, zp, omega);
  }
  if (p.lam_L != 0.0) {
    value -= I * p.lam_L * provider(z, p.z_L, omega) *
             provider(p.z_L, zp, omega);
  }
  return value;
}

QubitMatrix2 qubit_self_energy(const SystemSpec& system,
                               const GreensProvider& provider, double omega,
                               bool dressed) {
  const int n = static_cast<int>(system.qubits.size());
  if (n == 0) {
    throw std::invalid_argument(
        "qubit_self_energy: system contains no qubits");
  }
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  QubitMatrix2 sigma;
  sigma.size = n;
  for (int j = 0; j < n; ++j) {
    for (int jp = j; jp < n; ++jp) {
      const double zj = system.qubits[j].position_z;
      const double zjp = system.qubits[jp].position_z;
      const complexd green = dressed
                                 ? gp(system, provider, zj, zjp, omega)
                                 : provider(zj, zjp, omega);
      const complexd value =
          system.qubits[j].g * system.qubits[jp].g * Lc * green;
      sigma(j, jp) = value;
      sigma(jp, j) = value;  // symmetric kernel
    }
  }
  return sigma;
}

QubitMatrix2 dressed_qubit_green(const SystemSpec& system,
                                 const GreensProvider& provider,
                                 double omega) {
  const int n = static_cast<int>(system.qubits.size());
  QubitMatrix2 sigma = qubit_self_energy(system, provider, omega, true);

  // M = [Ghat0]^-1 - Sigma, inverted by closed-form adjugate.
  QubitMatrix2 M;
  M.size = n;
  for (int j = 0; j < n; ++j) {
    const QubitSpec& qb = system.qubits[j];
    M(j, j) = complexd(omega - qb.omega_q, 0.5 * qb.gamma_a) - sigma(j, j);
    for (int jp = 0; jp < n; ++jp) {
      if (jp != j) M(j, jp) = -sigma(j, jp);
    }
  }

  QubitMatrix2 G;
  G.size = n;
  double max_M = 0.0;
  double max_G = 0.0;
  if (n == 1) {
    G(0, 0) = 1.0 / M(0, 0);
    max_M = std::abs(M(0, 0));
    max_G = std::abs(G(0, 0));
  } else {
    const complexd det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    if (std::abs(det) == 0.0) {
      throw NumericalError("dressed_qubit_green",
                           "exactly singular qubit matrix");
    }
    G(0, 0) = M(1, 1) / det;
    G(1, 1) = M(0, 0) / det;
    G(0, 1) = -M(0, 1) / det;
    G(1, 0) = -M(1, 0) / det;
    for (int j = 0; j < n; ++j) {
      for (int jp = 0; jp < n; ++jp) {
        max_M = std::max(max_M, std::abs(M(j, jp)));
        max_G = std::max(max_G, std::abs(G(j, jp)));
      }
    }
  }
  // Rough condition estimate ||M|| * ||M^-1||; large values flag results
  // that sit numerically on a pole.
  G.near_singular = max_M * max_G > 1e14;
  return G;
}

complexd s_rl(const SystemSpec& system, const GreensProvider& provider,
              double omega) {
  const PortWeights p = port_weights(system);
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  const double amp = std::sqrt(system.port_left.gamma *
                               system.port_right.gamma);

  complexd S = -2.0 * I * amp * Lc * gp(system, provider, p.z_R, p.z_L, omega);

  const int n = static_cast<int>(system.qubits.size());
  if (n > 0) {
    const QubitMatrix2 G = dressed_qubit_green(system, provider, omega);
    complexd qubit_term(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const complexd left =
          gp(system, provider, p.z_R, system.qubits[j].position_z, omega);
      for (int jp = 0; jp < n; ++jp) {
        const complexd right =
            gp(system, provider, system.qubits[jp].position_z, p.z_L, omega);
        qubit_term += system.qubits[j].g * system.qubits[jp].g * left *
                      G(j, jp) * right;
      }
    }
    S += -2.0 * I * amp * Lc * Lc * qubit_term;
  }
  return S;
}

double transmission_db(complexd s) {
  const double power = std::norm(s);
  if (power == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(power);
}

ComplexSpectrum s_rl_spectrum(const SystemSpec& system,
                              const GreensProvider& provider, double f_min,
                              double f_max, long n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("s_rl_spectrum: need at least 2 points");
  }
  if (!(f_min < f_max)) {
    throw std::invalid_argument("s_rl_spectrum: need f_min < f_max");
  }
  ComplexSpectrum spectrum;
  spectrum.f_ghz.resize(n_points);
  spectrum.s.resize(n_points);
  spectrum.ok.assign(n_points, 1);
  const double df = (f_max - f_min) / static_cast<double>(n_points - 1);

  parallel_for(static_cast<std::size_t>(n_points), [&](std::size_t i) {
    const double f = f_min + df * static_cast<double>(i);
    spectrum.f_ghz[i] = f;
    try {
      spectrum.s[i] = s_rl(system, provider, ghz_to_rad(f));
    } catch (const std::exception&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      spectrum.s[i] = complexd(nan, nan);
      spectrum.ok[i] = 0;
    }
  });
  return spectrum;
}

}  // namespace wgqed
