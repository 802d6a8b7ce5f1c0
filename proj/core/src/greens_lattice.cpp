#include "wgqed/greens_lattice.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "wgqed/errors.hpp"

namespace wgqed {

namespace {

constexpr double pi = 3.14159265358979323846;

void check_site(const LatticeSpec& lat, long site, const char* op,
                const char* name) {
  if (site < 1 || site > lat.n_sites) {
    throw std::out_of_range(std::string(op) + ": site " + name + " = " +
                            std::to_string(site) + " outside [1, " +
                            std::to_string(lat.n_sites) + "]");
  }
}

}  // namespace

void validate(const LatticeSpec& lat) {
  if (lat.n_sites < 1) {
    throw ValidationError("lattice.n_sites", "must be at least 1");
  }
  if (!(lat.hopping_t > 0.0)) {
    throw ValidationError("lattice.hopping_t", "must be positive");
  }
  if (!(lat.lattice_a > 0.0)) {
    throw ValidationError("lattice.lattice_a", "must be positive");
  }
  if (!(lat.omega_c > 0.0)) {
    throw ValidationError("lattice.omega_c", "must be positive");
  }
}

double lattice_length(const LatticeSpec& lat) {
  return static_cast<double>(lat.n_sites + 1) * lat.lattice_a;
}

double lattice_mode_frequency(const LatticeSpec& lat, long l) {
  const double ka = static_cast<double>(l) * pi /
                    static_cast<double>(lat.n_sites + 1);
  return lat.omega_c + 2.0 * lat.hopping_t * (1.0 - std::cos(ka));
}

double lattice_mode_amplitude(const LatticeSpec& lat, long l, long site) {
  check_site(lat, site, "lattice_mode_amplitude", "n");
  const double L = lattice_length(lat);
  const double phase = static_cast<double>(l) * pi *
                       static_cast<double>(site) /
                       static_cast<double>(lat.n_sites + 1);
  return std::sqrt(2.0 / L) * std::sin(phase);
}

complexd lattice_g0(const LatticeSpec& lat, long site_n, long site_np,
                    double omega, double eta) {
  check_site(lat, site_n, "lattice_g0", "n");
  check_site(lat, site_np, "lattice_g0", "n'");
  const complexd omega_r(omega, eta * lat.omega_c);
  complexd sum(0.0, 0.0);
  complexd comp(0.0, 0.0);
  for (long l = 1; l <= lat.n_sites; ++l) {
    const double weight =
        lattice_mode_amplitude(lat, l, site_n) *
        lattice_mode_amplitude(lat, l, site_np);
    const complexd term = weight / (omega_r - lattice_mode_frequency(lat, l));
    const complexd y = term - comp;
    const complexd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double lattice_I(const LatticeSpec& lat, long n_bar, double delta) {
  if (n_bar < 0) {
    throw std::invalid_argument("lattice_I: n_bar must be non-negative");
  }
  if (!(delta > 0.0)) {
    throw std::domain_error(
        "lattice_I: requires delta > 0 (frequency below the band bottom)");
  }
  const double t = lat.hopping_t;
  const double root = std::sqrt((4.0 * t + delta) * delta);
  const double ratio = 2.0 * t / (2.0 * t + delta + root);
  return -std::pow(ratio, static_cast<double>(n_bar)) /
         (lat.lattice_a * root);
}

double lattice_g0_broadband(const LatticeSpec& lat, long site_n, long site_np,
                            double delta) {
  check_site(lat, site_n, "lattice_g0_broadband", "n");
  check_site(lat, site_np, "lattice_g0_broadband", "n'");
  if (!(delta > 0.0)) {
    throw std::domain_error(
        "lattice_g0_broadband: requires delta > 0 (below the band bottom)");
  }
  if (!(4.0 * lat.hopping_t > 20.0 * delta)) {
    std::clog << "wgqed: lattice_g0_broadband: 4t = " << 4.0 * lat.hopping_t
              << " rad/s is not large against delta = " << delta
              << "; broadband expansion degrades\n";
  }
  const double n_bar = std::abs(static_cast<double>(site_n - site_np));
  return -std::exp(-n_bar * std::sqrt(delta / lat.hopping_t)) /
         (lat.lattice_a * std::sqrt(4.0 * lat.hopping_t * delta));
}

double lattice_effective_mass(const LatticeSpec& lat) {
  return 1.0 / (2.0 * lat.hopping_t * lat.lattice_a * lat.lattice_a);
}

}  // namespace wgqed
