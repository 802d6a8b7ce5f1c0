#pragma once

#include <array>
#include <complex>
#include <vector>

#include "wgqed/greens_provider.hpp"
#include "wgqed/model.hpp"

namespace wgqed {

// 2x2 complex matrix indexed by qubit.  For single-qubit systems only the
// (0,0) entry is meaningful and `size` is 1.
struct QubitMatrix2 {
  std::array<std::array<complexd, 2>, 2> m{};
  int size = 0;
  // Set by matrix inversions whose condition estimate exceeds 1e14; the
  // values are still returned.
  bool near_singular = false;

  complexd& operator()(int j, int jp) { return m[j][jp]; }
  const complexd& operator()(int j, int jp) const { return m[j][jp]; }
};

// Port-dressed propagator c * G(p)(z, z'; omega): the empty-waveguide value
// corrected to all orders in the two port couplings.  Closed form, no
// matrix inversion.
complexd gp(const SystemSpec& system, const GreensProvider& provider, double z,
            double zp, double omega);

// Leading order of gp in the port couplings.
complexd gp_weak(const SystemSpec& system, const GreensProvider& provider,
                 double z, double zp, double omega);

// Sigma_{jj'} = g_j g_{j'} (L/c) * cG(z_j, z_{j'}; omega), with the dressed
// (gp) or bare (provider) propagator between the qubit positions.
QubitMatrix2 qubit_self_energy(const SystemSpec& system,
                               const GreensProvider& provider, double omega,
                               bool dressed);

// Ghat = ([Ghat0]^-1 - Sigma)^-1 with Ghat0_jj = 1/(omega - omega_qj +
// i gamma_aj / 2).  Closed-form adjugate inverse; near-singular systems are
// flagged, not rejected.
QubitMatrix2 dressed_qubit_green(const SystemSpec& system,
                                 const GreensProvider& provider, double omega);

// Transmission amplitude left port -> right port, including up to two
// qubits via the dressed qubit propagator.
complexd s_rl(const SystemSpec& system, const GreensProvider& provider,
              double omega);

inline double transmission_power(complexd s) { return std::norm(s); }
double transmission_db(complexd s);

struct ComplexSpectrum {
  std::vector<double> f_ghz;
  std::vector<complexd> s;
  // Per-point success; failed points carry NaN in `s` and false here.
  std::vector<char> ok;
};

// Uniform sweep of s_rl over [f_min, f_max] GHz inclusive.  Points are
// evaluated independently (parallel when threads are available) and
// assembled in grid order; a per-point failure is recorded rather than
// aborting the sweep.
ComplexSpectrum s_rl_spectrum(const SystemSpec& system,
                              const GreensProvider& provider, double f_min,
                              double f_max, long n_points);

}  // namespace wgqed
