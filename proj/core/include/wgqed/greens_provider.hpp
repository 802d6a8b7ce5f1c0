#pragma once

#include <complex>
#include <functional>
#include <string>

#include "wgqed/greens_lattice.hpp"
#include "wgqed/model.hpp"

namespace wgqed {

// Uniform evaluation seam for the empty-waveguide propagator.  Every provider
// returns the dimensionless c * G0(z, z'; omega); downstream algebra never
// cares which approximation produced it.
struct GreensProvider {
  std::string name;
  std::function<complexd(double z, double zp, double omega)> eval;

  complexd operator()(double z, double zp, double omega) const {
    return eval(z, zp, omega);
  }
};

GreensProvider make_pole_provider(const WaveguideSpec& wg);
GreensProvider make_truncated_provider(const WaveguideSpec& wg, long n_modes,
                                       bool include_fk = false);
GreensProvider make_long_waveguide_provider(const WaveguideSpec& wg);
GreensProvider make_single_mode_provider(const WaveguideSpec& wg);

// Adapter over a finite chain: positions snap to the nearest site,
// n = round((z + L/2)/a) clamped to [1, N], and the result is scaled by
// speed_c so it matches the c * G0 convention of the other providers.
GreensProvider make_lattice_provider(const LatticeSpec& lat, double speed_c);

GreensProvider make_provider(const SystemSpec& system, const std::string& name,
                             long n_modes = 2000);

}  // namespace wgqed
