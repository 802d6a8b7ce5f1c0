#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/greens_provider.hpp"
#include "wgqed/scattering.hpp"

using namespace wgqed;
using wgqed::test::rel_err;

namespace {

SystemSpec base_system(bool with_qubits) {
  SystemSpec system;
  system.waveguide.omega_c = 2.0 * M_PI * 6.5213e9;
  system.waveguide.length_L = 0.2;
  system.port_left = {-0.084, 2.0 * M_PI * 225e6};
  system.port_right = {0.084, 2.0 * M_PI * 225e6};
  if (with_qubits) {
    system.qubits = {
        {-0.022475, 2.0 * M_PI * 6.1e9, 0.0, 2.0 * M_PI * 62.53e6},
        {0.022475, 2.0 * M_PI * 6.15e9, 2.0 * M_PI * 0.2e6,
         2.0 * M_PI * 55e6},
    };
  }
  return system;
}

}  // namespace

TEST_CASE("port-dressed propagator matches the dense mode-space solve") {
  const SystemSpec system = base_system(false);
  const long n = 400;
  const GreensProvider provider = make_truncated_provider(system.waveguide, n);
  for (const double f_ghz : {6.0, 6.45, 6.9, 7.4}) {
    const double omega = 2.0 * M_PI * f_ghz * 1e9;
    const complexd dressed = gp(system, provider, -0.05, 0.0312, omega);
    const complexd oracle =
        test::momentum_space_green(system, omega, n, -0.05, 0.0312);
    CHECK(rel_err(dressed, oracle) < 1e-10);
  }
}

TEST_CASE("decoupled ports leave the bare propagator untouched") {
  SystemSpec system = base_system(false);
  system.port_left.gamma = 0.0;
  system.port_right.gamma = 0.0;
  const GreensProvider provider = make_pole_provider(system.waveguide);
  const double omega = 2.0 * M_PI * 6.2e9;
  CHECK(gp(system, provider, -0.03, 0.05, omega) ==
        provider(-0.03, 0.05, omega));
}

TEST_CASE("first Born order agrees at weak port coupling") {
  SystemSpec system = base_system(false);
  system.port_left.gamma = 2.0 * M_PI * 5e4;
  system.port_right.gamma = 2.0 * M_PI * 5e4;
  const GreensProvider provider = make_pole_provider(system.waveguide);
  const double omega = 2.0 * M_PI * 6.3e9;
  CHECK(rel_err(gp(system, provider, -0.05, 0.06, omega),
                gp_weak(system, provider, -0.05, 0.06, omega)) < 1e-4);
}

TEST_CASE("full transmission equals both independent representations") {
  const SystemSpec system = base_system(true);
  const long n = 600;
  const GreensProvider provider = make_truncated_provider(system.waveguide, n);
  const complexd i_unit(0.0, 1.0);
  const double amp = 2.0 *
                     std::sqrt(system.port_left.gamma *
                               system.port_right.gamma) *
                     system.waveguide.length_L / system.waveguide.speed_c;
  for (const double f_ghz : {6.05, 6.48, 7.1}) {
    const double omega = 2.0 * M_PI * f_ghz * 1e9;
    const complexd dressed = s_rl(system, provider, omega);
    const complexd mode_space =
        -i_unit * amp *
        test::momentum_space_green(system, omega, n,
                                   system.port_right.position_z,
                                   system.port_left.position_z);
    const complexd coordinate =
        test::coordinate_space_srl(system, provider, omega);
    CHECK(rel_err(dressed, mode_space) < 1e-8);
    CHECK(rel_err(dressed, coordinate) < 1e-10);
  }
}

TEST_CASE("transmission is reciprocal for asymmetric couplings") {
  SystemSpec forward = base_system(false);
  forward.port_left.gamma = 2.0 * M_PI * 225e6;
  forward.port_right.gamma = 2.0 * M_PI * 410e6;
  SystemSpec mirrored = forward;
  std::swap(mirrored.port_left.gamma, mirrored.port_right.gamma);
  const GreensProvider pf = make_pole_provider(forward.waveguide);
  for (const double f_ghz : {6.1, 6.8, 7.3}) {
    const double omega = 2.0 * M_PI * f_ghz * 1e9;
    CHECK(rel_err(s_rl(forward, pf, omega), s_rl(mirrored, pf, omega)) <
          1e-12);
  }
}

TEST_CASE("qubit self-energy matrix is symmetric") {
  const SystemSpec system = base_system(true);
  const GreensProvider provider = make_pole_provider(system.waveguide);
  const double omega = 2.0 * M_PI * 6.2e9;
  for (const bool dressed : {false, true}) {
    const QubitMatrix2 sigma =
        qubit_self_energy(system, provider, omega, dressed);
    REQUIRE(sigma.size == 2);
    CHECK(sigma(0, 1) == sigma(1, 0));
    CHECK(std::abs(sigma(0, 0)) > 0.0);
  }
}

TEST_CASE("dressed qubit Green function inverts its defining matrix") {
  const SystemSpec system = base_system(true);
  const GreensProvider provider = make_pole_provider(system.waveguide);
  const double omega = 2.0 * M_PI * 6.12e9;
  const QubitMatrix2 sigma = qubit_self_energy(system, provider, omega, true);
  const QubitMatrix2 green = dressed_qubit_green(system, provider, omega);
  const complexd i_unit(0.0, 1.0);
  for (int j = 0; j < 2; ++j) {
    for (int jp = 0; jp < 2; ++jp) {
      complexd acc(0.0, 0.0);
      for (int k = 0; k < 2; ++k) {
        const complexd bare_inv =
            j == k ? omega - system.qubits[j].omega_q +
                         i_unit * 0.5 * system.qubits[j].gamma_a
                   : complexd(0.0, 0.0);
        // contract [G0^-1 - Sigma] with the returned inverse
        acc += (bare_inv - sigma(j, k)) * green(k, jp);
      }
      CHECK(std::abs(acc - (j == jp ? 1.0 : 0.0)) < 1e-12);
    }
  }
  CHECK_FALSE(green.near_singular);
}

TEST_CASE("spectrum sweep is deterministic across thread counts") {
  const SystemSpec system = base_system(true);
  const GreensProvider provider = make_pole_provider(system.waveguide);
  setenv("WGQED_THREADS", "1", 1);
  const ComplexSpectrum serial = s_rl_spectrum(system, provider, 6.0, 7.2, 64);
  setenv("WGQED_THREADS", "4", 1);
  const ComplexSpectrum threaded =
      s_rl_spectrum(system, provider, 6.0, 7.2, 64);
  unsetenv("WGQED_THREADS");
  REQUIRE(serial.s.size() == threaded.s.size());
  for (std::size_t i = 0; i < serial.s.size(); ++i) {
    CHECK(serial.s[i] == threaded.s[i]);
    CHECK(serial.ok[i] == 1);
  }
  CHECK(serial.f_ghz.front() == 6.0);
  CHECK(serial.f_ghz.back() == 7.2);
  CHECK_THROWS_AS(s_rl_spectrum(system, provider, 7.0, 6.0, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(s_rl_spectrum(system, provider, 6.0, 7.0, 1),
                  std::invalid_argument);
}

TEST_CASE("transmission helpers") {
  CHECK(transmission_power(complexd(0.6, -0.8)) == doctest::Approx(1.0));
  CHECK(transmission_db(complexd(0.1, 0.0)) == doctest::Approx(-20.0));
  CHECK(transmission_db(complexd(0.0, 0.0)) ==
        -std::numeric_limits<double>::infinity());
}
