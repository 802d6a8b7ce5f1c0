#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wgqed {

// All internal frequencies are angular (rad/s), all lengths metres.  External
// interfaces (configs, CSV) speak GHz / MHz / mm and convert at the boundary.
inline constexpr double speed_of_light = 2.99792458e8;  // m/s, fixed
inline constexpr double two_pi = 6.283185307179586476925286766559;

inline constexpr double ghz_to_rad(double f_ghz) { return two_pi * f_ghz * 1e9; }
inline constexpr double mhz_to_rad(double f_mhz) { return two_pi * f_mhz * 1e6; }
inline constexpr double rad_to_ghz(double w) { return w / (two_pi * 1e9); }
inline constexpr double rad_to_mhz(double w) { return w / (two_pi * 1e6); }
inline constexpr double mm_to_m(double mm) { return mm * 1e-3; }
inline constexpr double m_to_mm(double m) { return m * 1e3; }

// Rectangular waveguide section of length L terminated by mirrors at
// z = -L/2 and z = +L/2, single transverse band with cutoff omega_c.
struct WaveguideSpec {
  double omega_c = 0.0;              // cutoff, rad/s
  double length_L = 0.0;             // mirror spacing, m
  double speed_c = speed_of_light;   // propagation speed, m/s
  double eta = 1e-6;                 // dimensionless regularizer on omega
};

// Weakly coupled probe port (local absorber) at a fixed position.
struct PortSpec {
  double position_z = 0.0;  // m, in [-L/2, L/2]
  double gamma = 0.0;       // bare decay rate into the port, rad/s
};

// Two-level emitter coupled to the field at one point.
struct QubitSpec {
  double position_z = 0.0;  // m, in [-L/2, L/2]
  double omega_q = 0.0;     // transition frequency, rad/s
  double gamma_a = 0.0;     // intrinsic (non-waveguide) linewidth, rad/s
  double g = 0.0;           // coupling amplitude, rad/s
};

struct SystemSpec {
  WaveguideSpec waveguide;
  PortSpec port_left;
  PortSpec port_right;
  std::vector<QubitSpec> qubits;  // 0, 1 or 2 entries
};

// Throws ValidationError on the first violated constraint.
void validate(const WaveguideSpec& wg);
void validate(const SystemSpec& system);

// JSON config <-> SystemSpec.  from_config takes the raw JSON text; unknown
// keys are an error so typos fail loudly.  load_config reads a file first.
SystemSpec from_config(const std::string& json_text);
SystemSpec load_config(const std::string& path);
std::string to_config(const SystemSpec& system);

// Effective emitter decay scale gamma = g^2 L / c for qubit `idx`.
double gamma_eff(const SystemSpec& system, std::size_t idx);

}  // namespace wgqed
