#pragma once

#include <string>
#include <vector>

namespace wgqed {

enum class Subcommand {
  transmission,
  boundstate,
  avoided_crossing,
  purcell,
  rabi,
  lattice,
};

const char* to_string(Subcommand sub);

// One CLI invocation, fully resolved.  Frequencies arrive in GHz/MHz (the
// CLI speaks experiment units); conversion to rad/s happens inside run().
struct RunRequest {
  Subcommand subcommand = Subcommand::transmission;
  std::string config_path;
  std::string output_path;

  // Waveguide model backing every physics call.
  std::string provider = "pole";  // pole|truncated|long|single-mode|lattice
  long n_modes = 2000;            // truncated provider depth

  // Shared sweep grid.
  double f_min_ghz = 0.0;
  double f_max_ghz = 0.0;
  long n_points = 0;

  // boundstate: qubit-frequency sweep bounds, GHz.
  double wq_min_ghz = 0.0;
  double wq_max_ghz = 0.0;

  // avoided-crossing: second-qubit frequency axis, GHz.
  double wq2_min_ghz = 0.0;
  double wq2_max_ghz = 0.0;
  long wq2_points = 0;

  // purcell: mode-count ladder; -1 selects the closed-form infinite sum.
  std::vector<long> purcell_modes{1, 5, 20, -1};

  // rabi: drive sweep (GHz) reuses f_min/f_max/n_points; time grid in us.
  double rabi_mhz = 0.0;     // Omega_r / 2pi
  double tau_us = 0.0;       // pulse length
  double t_end_us = 0.0;     // trace length
  long t_points = 0;

  // lattice: chain geometry; hopping defaults to the continuum
  // correspondence t = c^2/(2 a^2 omega_c) when left at 0.
  long lattice_sites = 0;
  double hopping_mhz = 0.0;
  double delta_mhz = 0.0;    // below-band detuning for the lattice tables
};

// Executes the request: computes, writes the CSV and its .meta.json sidecar
// (avoided-crossing also writes a .summary.json).  Returns the process exit
// code: 0 success, 1 config error, 2 numerical error.  Failures are
// reported on stderr with the failing operation named.
int run(const RunRequest& request);

}  // namespace wgqed
