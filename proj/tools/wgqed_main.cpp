#include <string>

#include "CLI11.hpp"
#include "wgqed/run.hpp"
#include "wgqed/version.hpp"

namespace {

void add_io_options(CLI::App* sub, wgqed::RunRequest& req) {
  sub->add_option("-c,--config", req.config_path, "system config JSON")
      ->required();
  sub->add_option("-o,--output", req.output_path, "output CSV path")
      ->required();
  sub->add_option("--provider", req.provider,
                  "Green's function backend: pole|truncated|long|"
                  "single-mode|lattice (default pole)");
  sub->add_option("--modes", req.n_modes,
                  "mode count for the truncated backend (default 2000)");
}

void add_freq_sweep(CLI::App* sub, wgqed::RunRequest& req) {
  sub->add_option("--fmin", req.f_min_ghz, "sweep start, GHz")->required();
  sub->add_option("--fmax", req.f_max_ghz, "sweep end, GHz")->required();
  sub->add_option("--points", req.n_points, "number of sweep points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite rectangular-waveguide QED: transmission, bound "
               "states, qubit-qubit coupling, emission dynamics"};
  app.set_version_flag("--version", wgqed::version_string);
  app.require_subcommand(1);

  wgqed::RunRequest req;
  double fd_ghz = 0.0;

  CLI::App* sub = app.add_subcommand(
      "transmission", "port-to-port S parameter over a frequency sweep");
  add_io_options(sub, req);
  add_freq_sweep(sub, req);
  sub->callback([&] { req.subcommand = wgqed::Subcommand::transmission; });

  sub = app.add_subcommand(
      "boundstate", "below-cutoff bound state vs bare qubit frequency");
  add_io_options(sub, req);
  sub->add_option("--wq-min", req.wq_min_ghz, "qubit sweep start, GHz")
      ->required();
  sub->add_option("--wq-max", req.wq_max_ghz, "qubit sweep end, GHz")
      ->required();
  sub->add_option("--points", req.n_points, "number of sweep points");
  sub->callback([&] { req.subcommand = wgqed::Subcommand::boundstate; });

  sub = app.add_subcommand(
      "avoided-crossing",
      "two-qubit transmission map vs second-qubit frequency");
  add_io_options(sub, req);
  add_freq_sweep(sub, req);
  sub->add_option("--wq2-min", req.wq2_min_ghz, "qubit-2 axis start, GHz")
      ->required();
  sub->add_option("--wq2-max", req.wq2_max_ghz, "qubit-2 axis end, GHz")
      ->required();
  sub->add_option("--wq2-points", req.wq2_points, "qubit-2 axis points");
  sub->callback(
      [&] { req.subcommand = wgqed::Subcommand::avoided_crossing; });

  sub = app.add_subcommand(
      "purcell", "radiative linewidth vs bound-state frequency, by mode count");
  add_io_options(sub, req);
  add_freq_sweep(sub, req);
  sub->add_option("--nr", req.purcell_modes,
                  "mode-count ladder; -1 selects the closed-form limit");
  sub->callback([&] { req.subcommand = wgqed::Subcommand::purcell; });

  sub = app.add_subcommand(
      "rabi", "driven bound-state emission traces (rows: time)");
  add_io_options(sub, req);
  sub->add_option("--fd", fd_ghz, "single drive frequency, GHz");
  sub->add_option("--fmin", req.f_min_ghz, "drive sweep start, GHz");
  sub->add_option("--fmax", req.f_max_ghz, "drive sweep end, GHz");
  sub->add_option("--points", req.n_points, "number of drive frequencies");
  sub->add_option("--rabi-mhz", req.rabi_mhz, "Rabi rate Omega/2pi, MHz")
      ->required();
  sub->add_option("--tau-us", req.tau_us, "drive pulse length, us")
      ->required();
  sub->add_option("--t-end-us", req.t_end_us, "trace length, us");
  sub->add_option("--t-points", req.t_points, "time samples per trace");
  CLI::App* rabi_cmd = sub;
  sub->callback([&] { req.subcommand = wgqed::Subcommand::rabi; });

  sub = app.add_subcommand(
      "lattice", "tight-binding chain propagator tables below the band");
  add_io_options(sub, req);
  sub->add_option("--sites", req.lattice_sites, "chain length")->required();
  sub->add_option("--hopping-mhz", req.hopping_mhz,
                  "hopping t/2pi, MHz (default: continuum correspondence)");
  sub->add_option("--delta-mhz", req.delta_mhz,
                  "below-band detuning delta/2pi, MHz")
      ->required();
  sub->callback([&] { req.subcommand = wgqed::Subcommand::lattice; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // every usage problem is a config error to callers
  }

  switch (req.subcommand) {
    case wgqed::Subcommand::transmission:
      if (req.n_points == 0) req.n_points = 1001;
      break;
    case wgqed::Subcommand::boundstate:
      if (req.n_points == 0) req.n_points = 201;
      break;
    case wgqed::Subcommand::avoided_crossing:
      if (req.n_points == 0) req.n_points = 301;
      if (req.wq2_points == 0) req.wq2_points = 41;
      break;
    case wgqed::Subcommand::purcell:
      if (req.n_points == 0) req.n_points = 201;
      break;
    case wgqed::Subcommand::rabi:
      if (rabi_cmd->count("--fd") > 0) {
        req.f_min_ghz = req.f_max_ghz = fd_ghz;
        req.n_points = 1;
      } else if (req.n_points == 0) {
        req.n_points = 41;
      }
      if (req.t_points == 0) req.t_points = 2001;
      if (req.t_end_us == 0.0) req.t_end_us = 3.0 * req.tau_us;
      break;
    case wgqed::Subcommand::lattice:
      break;
  }

  return wgqed::run(req);
}
