#include "wgqed/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "wgqed/errors.hpp"
#include "wgqed/greens_continuum.hpp"
#include "wgqed/parallel.hpp"
#include "wgqed/scattering.hpp"

namespace wgqed {

namespace {

constexpr double pi = 3.14159265358979323846;

void require_two_qubits(const SystemSpec& system, const char* op) {
  if (system.qubits.size() != 2) {
    throw std::invalid_argument(std::string(op) +
                                ": requires exactly two qubits");
  }
}

// The closed splitting formulas are derived for the mirror-symmetric pair;
// anything else must go through the determinant solver.
void require_symmetric(const SystemSpec& system, const char* op) {
  require_two_qubits(system, op);
  const QubitSpec& q1 = system.qubits[0];
  const QubitSpec& q2 = system.qubits[1];
  const double scale = std::abs(q1.position_z) + std::abs(q2.position_z);
  const bool mirrored = std::abs(q1.position_z + q2.position_z) <=
                        1e-9 * std::max(scale, system.waveguide.length_L);
  const bool matched = std::abs(q1.g - q2.g) <= 1e-9 * std::max(q1.g, q2.g) &&
                       std::abs(q1.omega_q - q2.omega_q) <=
                           1e-9 * std::max(q1.omega_q, q2.omega_q);
  if (!mirrored || !matched) {
    throw std::invalid_argument(
        std::string(op) +
        ": requires the symmetric pair (z1 = -z2, g1 = g2, wq1 = wq2)");
  }
}

// Bare self-energy entries, real in the stopband.
double sigma_bare(const SystemSpec& system, const GreensProvider& provider,
                  int j, int jp, double omega) {
  const double Lc = system.waveguide.length_L / system.waveguide.speed_c;
  return system.qubits[j].g * system.qubits[jp].g * Lc *
         provider(system.qubits[j].position_z, system.qubits[jp].position_z,
                  omega)
             .real();
}

struct ScanRoots {
  std::vector<double> roots;
  double min_value = 0.0;
  double min_at = 0.0;
};

}  // namespace

const char* to_string(SplittingMethod method) {
  switch (method) {
    case SplittingMethod::determinant: return "determinant";
    case SplittingMethod::self_consistent: return "self-consistent";
    case SplittingMethod::linear: return "linear";
    case SplittingMethod::long_waveguide: return "long-waveguide";
    case SplittingMethod::single_mode: return "single-mode";
    case SplittingMethod::overlap: return "overlap";
  }
  return "unknown";
}

SplittingResult solve_pair_determinant(const SystemSpec& system,
                                       const GreensProvider& provider) {
  require_two_qubits(system, "solve_pair_determinant");
  for (int j = 0; j < 2; ++j) {
    if (system.qubits[j].g == 0.0) {
      throw DegenerateConfigError(
          "solve_pair_determinant", 1,
          "qubit " + std::to_string(j + 1) +
              " is decoupled (g = 0); only a single bound state exists");
    }
  }

  // gamma_a plays no role in the real bound-state poles and is dropped here;
  // the determinant is then real in the stopband.
  auto det = [&](double omega) {
    const double f1 = omega - system.qubits[0].omega_q -
                      sigma_bare(system, provider, 0, 0, omega);
    const double f2 = omega - system.qubits[1].omega_q -
                      sigma_bare(system, provider, 1, 1, omega);
    const double s12 = sigma_bare(system, provider, 0, 1, omega);
    return f1 * f2 - s12 * s12;
  };

  auto bisect = [&](double lo, double hi, double f_lo) {
    while (hi - lo > 1e-12 * (0.5 * (hi + lo))) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = det(mid);
      if (f_mid == 0.0) return mid;
      if ((f_mid > 0.0) == (f_lo > 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  auto scan = [&](double lo, double hi, long n) {
    ScanRoots out;
    out.min_value = std::numeric_limits<double>::infinity();
    double prev_x = lo;
    double prev_f = det(lo);
    for (long i = 1; i <= n; ++i) {
      const double x =
          lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
      const double f = det(x);
      if (f < out.min_value) {
        out.min_value = f;
        out.min_at = x;
      }
      if ((f > 0.0) != (prev_f > 0.0) || f == 0.0) {
        out.roots.push_back(bisect(prev_x, x, prev_f));
      }
      prev_x = x;
      prev_f = f;
    }
    return out;
  };

  const double lo0 = 1e-3 * system.waveguide.omega_c;
  const double hi0 = system.waveguide.omega_c * (1.0 - 1e-6);
  ScanRoots found = scan(lo0, hi0, 2000);

  // A narrowly split pair can hide inside one coarse cell: the determinant
  // dips negative only across the splitting.  Zoom on the sampled minimum
  // until both crossings resolve.
  double window_lo = lo0;
  double window_hi = hi0;
  for (int level = 0; level < 8 && found.roots.size() < 2; ++level) {
    const double cell = (window_hi - window_lo) / 2000.0;
    window_lo = std::max(lo0, found.min_at - 2.0 * cell);
    window_hi = std::min(hi0, found.min_at + 2.0 * cell);
    found = scan(window_lo, window_hi, 2000);
  }

  if (found.roots.size() != 2) {
    throw DegenerateConfigError(
        "solve_pair_determinant", static_cast<int>(found.roots.size()),
        "expected two determinant roots in the stopband, found " +
            std::to_string(found.roots.size()) +
            " (scan minimum " + std::to_string(found.min_value) + " at " +
            std::to_string(found.min_at) + " rad/s)");
  }

  SplittingResult result;
  result.method = SplittingMethod::determinant;
  const double w1 = std::min(found.roots[0], found.roots[1]);
  const double w2 = std::max(found.roots[0], found.roots[1]);
  result.omega_bar_b = 0.5 * (w1 + w2);
  result.delta = w2 - w1;
  result.J = result.delta;
  return result;
}

double splitting_selfconsistent(const SystemSpec& system,
                                const GreensProvider& provider,
                                double omega_bar_b) {
  require_symmetric(system, "splitting_selfconsistent");

  auto sigma_pm = [&](double omega, double sign) {
    return sigma_bare(system, provider, 0, 0, omega) +
           sign * sigma_bare(system, provider, 0, 1, omega);
  };

  double delta = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double next = sigma_pm(omega_bar_b + 0.5 * delta, -1.0) -
                        sigma_pm(omega_bar_b - 0.5 * delta, +1.0);
    if (std::abs(next - delta) <= 1e-10 * std::abs(next)) {
      return next;
    }
    if (next == delta) return next;  // exact fixed point (e.g. g = 0)
    const double prev = delta;
    delta = next;
    if (it == 199) {
      throw IterationError("splitting_selfconsistent", delta, prev);
    }
  }
  return delta;  // unreachable
}

double j_linear(const SystemSpec& system, const GreensProvider& provider,
                double omega_bar_b) {
  require_symmetric(system, "j_linear");
  const double s12 = sigma_bare(system, provider, 0, 1, omega_bar_b);
  const double Z = quasiparticle_weight(system, provider, omega_bar_b, 0);
  return -2.0 * s12 * Z;
}

double j_long_waveguide(const WaveguideSpec& wg, double gamma, double d,
                        double omega_bar_b) {
  if (omega_bar_b >= wg.omega_c) {
    throw std::domain_error(
        "j_long_waveguide: omega_bar_b must lie below cutoff");
  }
  const double xi = wg.speed_c / std::sqrt(wg.omega_c * wg.omega_c -
                                           omega_bar_b * omega_bar_b);
  if (wg.length_L < 10.0 * xi) {
    std::clog << "wgqed: j_long_waveguide: L = " << wg.length_L
              << " m is not large against xi = " << xi
              << " m; mirror images are not negligible\n";
  }
  const double xic = xi / wg.speed_c;
  const double denom =
      1.0 + gamma * wg.omega_c * wg.omega_c * xic * xic * xic;
  return 2.0 * gamma * (omega_bar_b * xic) * std::exp(-d / xi) / denom;
}

double single_mode_gtilde(const SystemSpec& system, std::size_t qubit_index) {
  if (qubit_index >= system.qubits.size()) {
    throw std::out_of_range("single_mode_gtilde: qubit index out of range");
  }
  const QubitSpec& qb = system.qubits[qubit_index];
  const WaveguideSpec& wg = system.waveguide;
  // g sqrt(L) psi_1(z) = g sqrt(2) sin(pi (z + L/2) / L)
  return qb.g * std::sqrt(2.0) *
         std::sin(pi * (qb.position_z + 0.5 * wg.length_L) / wg.length_L);
}

double single_mode_weight(const SystemSpec& system, double omega_bar_b) {
  if (system.qubits.empty()) {
    throw std::invalid_argument("single_mode_weight: no qubits configured");
  }
  const double eps_1 = mode_frequency(system.waveguide, 1);
  const double gt = single_mode_gtilde(system, 0);
  const double det = eps_1 - omega_bar_b;
  if (det == 0.0) {
    throw NumericalError("single_mode_weight",
                         "omega_bar_b sits on the fundamental resonance");
  }
  return 1.0 / (1.0 + gt * gt / (det * det));
}

double j_single_mode(const SystemSpec& system, double omega_bar_b) {
  require_symmetric(system, "j_single_mode");
  const WaveguideSpec& wg = system.waveguide;
  const double eps_1 = mode_frequency(wg, 1);
  const double det = eps_1 - omega_bar_b;
  if (det == 0.0) {
    throw NumericalError("j_single_mode",
                         "omega_bar_b sits on the fundamental resonance");
  }
  const double spacing_scale = wg.speed_c * pi / wg.length_L;
  if (std::abs(det) > 0.25 * spacing_scale) {
    std::clog << "wgqed: j_single_mode: |eps_1 - omega_bar_b| = "
              << std::abs(det) << " rad/s is not small against c*pi/L = "
              << spacing_scale << "; single-mode picture is stretched\n";
  }
  const double g1 = single_mode_gtilde(system, 0);
  const double g2 = single_mode_gtilde(system, 1);
  return 2.0 * single_mode_weight(system, omega_bar_b) * g1 * g2 / det;
}

double j_overlap(const SystemSpec& system, const GreensProvider& provider,
                 double omega_bar_b, const std::vector<double>& z_grid) {
  require_symmetric(system, "j_overlap");
  if (z_grid.size() >= 2) {
    const double xi =
        localization_length(system.waveguide, omega_bar_b);
    double max_spacing = 0.0;
    for (std::size_t i = 1; i < z_grid.size(); ++i) {
      max_spacing = std::max(max_spacing, z_grid[i] - z_grid[i - 1]);
    }
    if (max_spacing > xi / 50.0) {
      std::clog << "wgqed: j_overlap: grid spacing " << max_spacing
                << " m exceeds xi/50 = " << xi / 50.0
                << " m; overlap integrals at this resolution would be "
                << "unreliable\n";
    }
  }
  // Appendix-route matrix element collapses to Z * Sigma_12 of the bare
  // propagator; the grid is only a resolution contract, not a summation.
  const double s12 = sigma_bare(system, provider, 0, 1, omega_bar_b);
  const double Z = quasiparticle_weight(system, provider, omega_bar_b, 0);
  return 2.0 * std::abs(Z * s12);
}

AvoidedCrossingMap avoided_crossing_map(const SystemSpec& system,
                                        const GreensProvider& provider,
                                        const std::vector<double>& omega_q2_grid,
                                        const std::vector<double>& f_grid) {
  require_two_qubits(system, "avoided_crossing_map");
  if (omega_q2_grid.empty() || f_grid.empty()) {
    throw std::invalid_argument("avoided_crossing_map: empty grid");
  }

  AvoidedCrossingMap map;
  map.omega_q2 = omega_q2_grid;
  map.omega = f_grid;
  map.power.assign(f_grid.size(),
                   std::vector<double>(omega_q2_grid.size(), 0.0));

  std::vector<std::vector<double>> columns(omega_q2_grid.size());
  parallel_for(omega_q2_grid.size(), [&](std::size_t col) {
    SystemSpec scanned = system;
    scanned.qubits[1].omega_q = omega_q2_grid[col];
    std::vector<double> column(f_grid.size());
    for (std::size_t row = 0; row < f_grid.size(); ++row) {
      column[row] =
          transmission_power(s_rl(scanned, provider, f_grid[row]));
    }
    columns[col] = std::move(column);
  });
  for (std::size_t col = 0; col < omega_q2_grid.size(); ++col) {
    for (std::size_t row = 0; row < f_grid.size(); ++row) {
      map.power[row][col] = columns[col][row];
    }
  }

  // Measured J: per column, find the two dominant local maxima, refine each
  // peak on a parabola through its three samples, and take the smallest
  // separation across the sweep.
  double best = std::numeric_limits<double>::infinity();
  double best_q2 = 0.0;
  for (std::size_t col = 0; col < omega_q2_grid.size(); ++col) {
    struct Peak {
      double height;
      double position;
    };
    std::vector<Peak> peaks;
    for (std::size_t row = 1; row + 1 < f_grid.size(); ++row) {
      const double y0 = map.power[row - 1][col];
      const double y1 = map.power[row][col];
      const double y2 = map.power[row + 1][col];
      if (y1 > y0 && y1 > y2) {
        const double curvature = y0 - 2.0 * y1 + y2;
        double offset = 0.0;
        if (curvature < 0.0) offset = 0.5 * (y0 - y2) / curvature;
        const double h = f_grid[row + 1] - f_grid[row];
        peaks.push_back({y1, f_grid[row] + offset * h});
      }
    }
    if (peaks.size() < 2) continue;
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.height > b.height; });
    const double separation = std::abs(peaks[0].position - peaks[1].position);
    if (separation < best) {
      best = separation;
      best_q2 = omega_q2_grid[col];
    }
  }
  if (std::isfinite(best)) {
    map.extracted_J = best;
    map.omega_q2_at_min = best_q2;
  }
  return map;
}

}  // namespace wgqed
