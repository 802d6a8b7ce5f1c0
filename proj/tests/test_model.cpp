#include <cmath>
#include <string>

#include "doctest.h"
#include "wgqed/errors.hpp"
#include "wgqed/model.hpp"

using namespace wgqed;

namespace {

const std::string kMinimal = R"({
  "waveguide": {"omega_c_GHz": 6.5213, "length_L_mm": 200.0},
  "ports": {
    "left":  {"z_mm": -84.0, "gamma_MHz": 225.0},
    "right": {"z_mm":  84.0, "gamma_MHz": 225.0}
  },
  "qubits": [
    {"z_mm": 0.0, "omega_q_GHz": 6.08, "gamma_a_MHz": 0.01, "g_MHz": 62.53}
  ]
})";

}  // namespace

TEST_CASE("config parsing converts experiment units to rad/s and meters") {
  const SystemSpec system = from_config(kMinimal);
  CHECK(system.waveguide.omega_c == doctest::Approx(2.0 * M_PI * 6.5213e9));
  CHECK(system.waveguide.length_L == doctest::Approx(0.200));
  CHECK(system.waveguide.eta == doctest::Approx(1e-6));
  CHECK(system.port_left.position_z == doctest::Approx(-0.084));
  CHECK(system.port_right.gamma == doctest::Approx(2.0 * M_PI * 225.0e6));
  REQUIRE(system.qubits.size() == 1);
  CHECK(system.qubits[0].omega_q == doctest::Approx(2.0 * M_PI * 6.08e9));
  CHECK(system.qubits[0].g == doctest::Approx(2.0 * M_PI * 62.53e6));
  CHECK(system.qubits[0].gamma_a == doctest::Approx(2.0 * M_PI * 1.0e4));
}

TEST_CASE("config round trip preserves every field") {
  const SystemSpec a = from_config(kMinimal);
  const SystemSpec b = from_config(to_config(a));
  CHECK(a.waveguide.omega_c == b.waveguide.omega_c);
  CHECK(a.waveguide.length_L == b.waveguide.length_L);
  CHECK(a.waveguide.eta == b.waveguide.eta);
  CHECK(a.port_left.position_z == b.port_left.position_z);
  CHECK(a.port_right.gamma == b.port_right.gamma);
  REQUIRE(a.qubits.size() == b.qubits.size());
  CHECK(a.qubits[0].omega_q == b.qubits[0].omega_q);
  CHECK(a.qubits[0].g == b.qubits[0].g);
}

TEST_CASE("unknown keys are rejected, not ignored") {
  std::string bad = kMinimal;
  bad.replace(bad.find("length_L_mm"), 11, "lenght_L_mm");
  CHECK_THROWS_AS(from_config(bad), ConfigError);
}

TEST_CASE("malformed JSON reports a parse failure") {
  CHECK_THROWS_AS(from_config("{\"waveguide\": "), ConfigError);
}

TEST_CASE("validation names the offending field") {
  SUBCASE("port outside the waveguide") {
    std::string bad = kMinimal;
    bad.replace(bad.find("\"z_mm\":  84.0"), 13, "\"z_mm\": 184.0");
    try {
      from_config(bad);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.field()).find("position_z") != std::string::npos);
      CHECK(std::string(e.field()).find("right") != std::string::npos);
    }
  }
  SUBCASE("negative coupling") {
    std::string bad = kMinimal;
    bad.replace(bad.find("\"g_MHz\": 62.53"), 14, "\"g_MHz\": -5.0");
    try {
      from_config(bad);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.field()).find("qubits[0]") != std::string::npos);
    }
  }
  SUBCASE("ports out of order") {
    std::string bad = kMinimal;
    bad.replace(bad.find("\"z_mm\": -84.0"), 13, "\"z_mm\": 90.0");
    CHECK_THROWS_AS(from_config(bad), ValidationError);
  }
  SUBCASE("cutoff must be positive") {
    std::string bad = kMinimal;
    bad.replace(bad.find("6.5213"), 6, "-1.000");
    CHECK_THROWS_AS(from_config(bad), ValidationError);
  }
}

TEST_CASE("at most two qubits are supported") {
  SystemSpec system = from_config(kMinimal);
  system.qubits.push_back(system.qubits[0]);
  system.qubits.push_back(system.qubits[0]);
  system.qubits[1].position_z = -0.05;
  system.qubits[2].position_z = 0.05;
  CHECK_THROWS_AS(validate(system), ValidationError);
}

TEST_CASE("example configs on disk all load") {
  for (const char* name :
       {"empty_waveguide", "empty_waveguide_bright", "single_qubit",
        "two_qubit"}) {
    const SystemSpec system =
        load_config(std::string(WGQED_CONFIG_DIR) + "/" + name + ".json");
    CHECK(system.waveguide.omega_c > 0.0);
  }
  CHECK_THROWS_AS(load_config(std::string(WGQED_CONFIG_DIR) + "/absent.json"),
                  ConfigError);
}

TEST_CASE("effective decay rate gamma = g^2 L / c") {
  SystemSpec system = from_config(kMinimal);
  system.waveguide.length_L = 0.300;
  // pinned against an independent evaluation of (2 pi 62.53e6)^2 0.3 / c
  CHECK(gamma_eff(system, 0) ==
        doctest::Approx(1.544675100168265e+08).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_eff(system, 3), std::out_of_range);
}
