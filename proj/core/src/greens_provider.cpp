#include "wgqed/greens_provider.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wgqed/errors.hpp"
#include "wgqed/greens_continuum.hpp"

namespace wgqed {

GreensProvider make_pole_provider(const WaveguideSpec& wg) {
  return {"pole", [wg](double z, double zp, double omega) {
            return g0_pole(wg, z, zp, omega);
          }};
}

GreensProvider make_truncated_provider(const WaveguideSpec& wg, long n_modes,
                                       bool include_fk) {
  if (n_modes < 1) {
    throw std::invalid_argument(
        "make_truncated_provider: n_modes must be >= 1");
  }
  std::string name = "truncated(" + std::to_string(n_modes) + ")";
  return {std::move(name), [wg, n_modes, include_fk](double z, double zp,
                                                     double omega) {
            return g0_truncated(wg, z, zp, omega, n_modes, include_fk);
          }};
}

GreensProvider make_long_waveguide_provider(const WaveguideSpec& wg) {
  return {"long", [wg](double z, double zp, double omega) {
            return g0_long(wg, z, zp, omega);
          }};
}

GreensProvider make_single_mode_provider(const WaveguideSpec& wg) {
  return {"single-mode", [wg](double z, double zp, double omega) {
            return g0_single_mode(wg, z, zp, omega);
          }};
}

GreensProvider make_lattice_provider(const LatticeSpec& lat, double speed_c) {
  validate(lat);
  const double L = lattice_length(lat);
  // Continuum positions snap to the nearest interior site; the speed factor
  // converts G (1/(m*rad/s)) to the shared c*G0 convention.
  auto site_of = [lat, L](double z) {
    const long n = std::lround((z + 0.5 * L) / lat.lattice_a);
    return std::clamp(n, 1L, lat.n_sites);
  };
  return {"lattice", [lat, speed_c, site_of](double z, double zp,
                                             double omega) {
            return speed_c * lattice_g0(lat, site_of(z), site_of(zp), omega);
          }};
}

GreensProvider make_provider(const SystemSpec& system, const std::string& name,
                             long n_modes) {
  const WaveguideSpec& wg = system.waveguide;
  if (name == "pole") return make_pole_provider(wg);
  if (name == "truncated") return make_truncated_provider(wg, n_modes);
  if (name == "long") return make_long_waveguide_provider(wg);
  if (name == "single-mode") return make_single_mode_provider(wg);
  if (name == "lattice") {
    // n_modes doubles as the chain size; spacing fills the waveguide and the
    // hopping is pinned by the band-bottom effective-mass correspondence
    // m_eff = 1/(2 t a^2) = omega_c / c^2.
    LatticeSpec lat;
    lat.n_sites = n_modes;
    lat.lattice_a = wg.length_L / static_cast<double>(n_modes + 1);
    lat.omega_c = wg.omega_c;
    lat.hopping_t = wg.speed_c * wg.speed_c /
                    (2.0 * lat.lattice_a * lat.lattice_a * wg.omega_c);
    return make_lattice_provider(lat, wg.speed_c);
  }
  throw ConfigError("unknown provider \"" + name +
                    "\" (expected pole|truncated|long|single-mode|lattice)");
}

}  // namespace wgqed
