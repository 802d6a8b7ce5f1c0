#include "wgqed/run.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <vector>

#include "nlohmann/json.hpp"
#include "wgqed/boundstate.hpp"
#include "wgqed/csv.hpp"
#include "wgqed/dynamics.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/greens_lattice.hpp"
#include "wgqed/greens_provider.hpp"
#include "wgqed/interaction.hpp"
#include "wgqed/model.hpp"
#include "wgqed/parallel.hpp"
#include "wgqed/purcell.hpp"
#include "wgqed/scattering.hpp"
#include "wgqed/version.hpp"

namespace wgqed {

namespace {

using nlohmann::json;

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double lo, double hi, long n) {
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (long i = 0; i < n; ++i) {
    grid[i] = lo + step * static_cast<double>(i);
  }
  return grid;
}

// out.csv -> out; anything else keeps its full name as the stem.
std::string output_stem(const std::string& path) {
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return path.substr(0, path.size() - 4);
  }
  return path;
}

std::string ghz_label(const char* prefix, double f_ghz) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%.6f", prefix, f_ghz);
  return buf;
}

struct RunContext {
  SystemSpec system;
  GreensProvider provider;
  std::string config_hash;
  std::string comment;
};

RunContext make_context(const RunRequest& request) {
  if (request.config_path.empty()) {
    throw ConfigError("no config file given");
  }
  if (request.output_path.empty()) {
    throw ConfigError("no output path given");
  }
  RunContext ctx{load_config(request.config_path),
                 GreensProvider{},
                 {},
                 {}};
  ctx.provider = make_provider(ctx.system, request.provider, request.n_modes);
  ctx.config_hash = hash_hex(fnv1a64(to_config(ctx.system)));
  ctx.comment = std::string("wgqed ") + to_string(request.subcommand) + " v" +
                version_string + " config=" + ctx.config_hash +
                " provider=" + ctx.provider.name;
  return ctx;
}

void write_meta(const RunRequest& request, const RunContext& ctx,
                json extra) {
  json meta;
  meta["version"] = version_string;
  meta["subcommand"] = to_string(request.subcommand);
  meta["provider"] = ctx.provider.name;
  meta["config_hash"] = ctx.config_hash;
  meta["config"] = json::parse(to_config(ctx.system));
  if (!extra.is_null()) meta["result"] = std::move(extra);
  write_text_file(output_stem(request.output_path) + ".meta.json",
                  meta.dump(2) + "\n");
}

void require_sweep(const RunRequest& request, const char* what) {
  if (request.n_points < 2) {
    throw ConfigError(std::string(what) + ": need at least 2 sweep points");
  }
  if (!(request.f_min_ghz < request.f_max_ghz)) {
    throw ConfigError(std::string(what) + ": need fmin < fmax");
  }
}

void run_transmission(const RunRequest& request, const RunContext& ctx) {
  require_sweep(request, "transmission");
  const ComplexSpectrum spectrum =
      s_rl_spectrum(ctx.system, ctx.provider, request.f_min_ghz,
                    request.f_max_ghz, request.n_points);

  CsvWriter csv(ctx.comment, {"f_GHz", "re_S", "im_S", "abs_S2", "abs_S_dB"});
  for (std::size_t i = 0; i < spectrum.f_ghz.size(); ++i) {
    const complexd s = spectrum.s[i];
    if (spectrum.ok[i]) {
      csv.add_row({spectrum.f_ghz[i], s.real(), s.imag(),
                   transmission_power(s), transmission_db(s)});
    } else {
      csv.add_row({spectrum.f_ghz[i], nan_value, nan_value, nan_value,
                   nan_value});
    }
  }
  csv.write(request.output_path);
  write_meta(request, ctx,
             json{{"points", request.n_points},
                  {"f_min_GHz", request.f_min_ghz},
                  {"f_max_GHz", request.f_max_ghz}});
}

void run_boundstate(const RunRequest& request, const RunContext& ctx) {
  if (ctx.system.qubits.empty()) {
    throw ConfigError("boundstate: config must contain at least one qubit");
  }
  if (request.n_points < 1) {
    throw ConfigError("boundstate: need at least 1 sweep point");
  }
  if (!(request.wq_min_ghz <= request.wq_max_ghz)) {
    throw ConfigError("boundstate: need wq-min <= wq-max");
  }
  const std::vector<double> wq_grid =
      linspace(request.wq_min_ghz, request.wq_max_ghz, request.n_points);

  struct Row {
    double wq_ghz;
    BoundStateResult bound;
    bool ok;
  };
  std::vector<Row> rows(wq_grid.size());
  parallel_for(wq_grid.size(), [&](std::size_t i) {
    rows[i].wq_ghz = wq_grid[i];
    SystemSpec swept = ctx.system;
    swept.qubits[0].omega_q = ghz_to_rad(wq_grid[i]);
    try {
      rows[i].bound = solve_bound_state(swept, ctx.provider, 0);
      rows[i].ok = true;
    } catch (const std::exception&) {
      rows[i].ok = false;
    }
  });

  CsvWriter csv(ctx.comment,
                {"wq_GHz", "wb_GHz", "Z", "Gamma_b_MHz", "A", "xi_mm"});
  long n_ok = 0;
  for (const Row& row : rows) {
    if (row.ok) {
      ++n_ok;
      csv.add_row({row.wq_ghz, rad_to_ghz(row.bound.omega_b), row.bound.Z,
                   rad_to_mhz(row.bound.gamma_b), row.bound.amplitude_A,
                   m_to_mm(row.bound.xi)});
    } else {
      csv.add_row({row.wq_ghz, nan_value, nan_value, nan_value, nan_value,
                   nan_value});
    }
  }
  if (n_ok == 0) {
    throw NumericalError("solve_bound_state",
                         "no bound state found anywhere in the sweep");
  }
  csv.write(request.output_path);
  write_meta(request, ctx,
             json{{"points", request.n_points},
                  {"solved", n_ok},
                  {"wq_min_GHz", request.wq_min_ghz},
                  {"wq_max_GHz", request.wq_max_ghz}});
}

void run_avoided_crossing(const RunRequest& request, const RunContext& ctx) {
  require_sweep(request, "avoided-crossing");
  if (request.wq2_points < 2) {
    throw ConfigError("avoided-crossing: need at least 2 wq2 points");
  }
  if (!(request.wq2_min_ghz < request.wq2_max_ghz)) {
    throw ConfigError("avoided-crossing: need wq2-min < wq2-max");
  }
  if (ctx.system.qubits.size() != 2) {
    throw ConfigError("avoided-crossing: config must contain two qubits");
  }

  std::vector<double> wq2_grid_ghz =
      linspace(request.wq2_min_ghz, request.wq2_max_ghz, request.wq2_points);
  std::vector<double> f_grid_ghz =
      linspace(request.f_min_ghz, request.f_max_ghz, request.n_points);
  std::vector<double> wq2_grid(wq2_grid_ghz.size());
  std::vector<double> f_grid(f_grid_ghz.size());
  for (std::size_t i = 0; i < wq2_grid.size(); ++i) {
    wq2_grid[i] = ghz_to_rad(wq2_grid_ghz[i]);
  }
  for (std::size_t i = 0; i < f_grid.size(); ++i) {
    f_grid[i] = ghz_to_rad(f_grid_ghz[i]);
  }

  const AvoidedCrossingMap map =
      avoided_crossing_map(ctx.system, ctx.provider, wq2_grid, f_grid);

  std::vector<std::string> columns{"f_GHz"};
  for (double wq2 : wq2_grid_ghz) {
    columns.push_back(ghz_label("wq2_", wq2));
  }
  CsvWriter csv(ctx.comment, columns);
  for (std::size_t row = 0; row < f_grid_ghz.size(); ++row) {
    std::vector<double> cells{f_grid_ghz[row]};
    cells.insert(cells.end(), map.power[row].begin(), map.power[row].end());
    csv.add_row(cells);
  }
  csv.write(request.output_path);

  const json summary = {
      {"extracted_J_MHz", rad_to_mhz(map.extracted_J)},
      {"omega_q2_at_min_GHz", rad_to_ghz(map.omega_q2_at_min)},
      {"config_hash", ctx.config_hash},
  };
  write_text_file(output_stem(request.output_path) + ".summary.json",
                  summary.dump(2) + "\n");
  write_meta(request, ctx, summary);
}

void run_purcell(const RunRequest& request, const RunContext& ctx) {
  require_sweep(request, "purcell");
  if (ctx.system.qubits.empty()) {
    throw ConfigError("purcell: config must contain at least one qubit");
  }
  if (request.purcell_modes.empty()) {
    throw ConfigError("purcell: empty mode ladder");
  }
  const std::vector<double> f_grid =
      linspace(request.f_min_ghz, request.f_max_ghz, request.n_points);

  std::vector<std::string> columns{"wb_GHz"};
  for (long n : request.purcell_modes) {
    columns.push_back(n == purcell_infinite_marker
                          ? "gamma_r_inf_MHz"
                          : "gamma_r_N" + std::to_string(n) + "_MHz");
  }

  std::vector<std::vector<double>> rows(f_grid.size());
  parallel_for(f_grid.size(), [&](std::size_t i) {
    const double omega_b = ghz_to_rad(f_grid[i]);
    std::vector<double> row{f_grid[i]};
    for (long n : request.purcell_modes) {
      try {
        const PurcellResult r =
            n == purcell_infinite_marker
                ? purcell_infinite(ctx.system, ctx.provider, omega_b, 0)
                : purcell_finite(ctx.system, omega_b, n, 0);
        row.push_back(rad_to_mhz(r.gamma_r));
      } catch (const std::exception&) {
        row.push_back(nan_value);
      }
    }
    rows[i] = std::move(row);
  });

  CsvWriter csv(ctx.comment, columns);
  for (const std::vector<double>& row : rows) csv.add_row(row);
  csv.write(request.output_path);
  write_meta(request, ctx,
             json{{"points", request.n_points},
                  {"modes", request.purcell_modes}});
}

void run_rabi(const RunRequest& request, const RunContext& ctx) {
  if (ctx.system.qubits.empty()) {
    throw ConfigError("rabi: config must contain at least one qubit");
  }
  if (request.n_points < 1) {
    throw ConfigError("rabi: need at least 1 drive frequency");
  }
  if (!(request.rabi_mhz > 0.0)) {
    throw ConfigError("rabi: need rabi-mhz > 0");
  }
  if (!(request.tau_us > 0.0)) {
    throw ConfigError("rabi: need tau-us > 0");
  }
  if (!(request.t_end_us > 0.0) || request.t_points < 2) {
    throw ConfigError("rabi: need t-end-us > 0 and t-points >= 2");
  }
  if (request.n_points > 1 && !(request.f_min_ghz < request.f_max_ghz)) {
    throw ConfigError("rabi: need fmin < fmax for a drive sweep");
  }

  const BoundStateResult bound =
      solve_bound_state(ctx.system, ctx.provider, 0);
  const std::vector<double> fd_grid_ghz =
      linspace(request.f_min_ghz, request.f_max_ghz, request.n_points);
  std::vector<double> omega_d_grid(fd_grid_ghz.size());
  for (std::size_t i = 0; i < fd_grid_ghz.size(); ++i) {
    omega_d_grid[i] = ghz_to_rad(fd_grid_ghz[i]);
  }
  std::vector<double> t_grid_s(request.t_points);
  const double t_end = request.t_end_us * 1e-6;
  for (long i = 0; i < request.t_points; ++i) {
    t_grid_s[i] = t_end * static_cast<double>(i) /
                  static_cast<double>(request.t_points - 1);
  }

  const ChevronMap map =
      chevron_map(bound, mhz_to_rad(request.rabi_mhz),
                  request.tau_us * 1e-6, omega_d_grid, t_grid_s);

  // Rows are time so a single-frequency trace reads naturally top to bottom.
  std::vector<std::string> columns{"t_us"};
  for (double fd : fd_grid_ghz) {
    columns.push_back(ghz_label("fd_", fd));
  }
  CsvWriter csv(ctx.comment, columns);
  for (std::size_t col = 0; col < t_grid_s.size(); ++col) {
    std::vector<double> cells{t_grid_s[col] * 1e6};
    for (std::size_t row = 0; row < omega_d_grid.size(); ++row) {
      cells.push_back(map.emission[row][col]);
    }
    csv.add_row(cells);
  }
  csv.write(request.output_path);

  write_meta(
      request, ctx,
      json{{"wb_GHz", rad_to_ghz(bound.omega_b)},
           {"Z", bound.Z},
           {"Gamma_b_MHz", rad_to_mhz(bound.gamma_b)},
           {"xi_mm", m_to_mm(bound.xi)},
           {"rabi_MHz", request.rabi_mhz},
           {"tau_us", request.tau_us},
           {"emission_prefactor",
            emission_prefactor(ctx.system, ctx.provider, bound, 0)}});
}

void run_lattice(const RunRequest& request, const RunContext& ctx) {
  if (request.lattice_sites < 2) {
    throw ConfigError("lattice: need at least 2 sites");
  }
  if (!(request.delta_mhz > 0.0)) {
    throw ConfigError("lattice: need delta-mhz > 0 (below-band detuning)");
  }
  const WaveguideSpec& wg = ctx.system.waveguide;
  LatticeSpec lat;
  lat.n_sites = request.lattice_sites;
  lat.lattice_a = wg.length_L / static_cast<double>(lat.n_sites + 1);
  lat.omega_c = wg.omega_c;
  lat.hopping_t = request.hopping_mhz > 0.0
                      ? mhz_to_rad(request.hopping_mhz)
                      : wg.speed_c * wg.speed_c /
                            (2.0 * lat.lattice_a * lat.lattice_a * wg.omega_c);
  validate(lat);

  const double delta = mhz_to_rad(request.delta_mhz);
  const double omega = wg.omega_c - delta;
  // Reference site a third of the way in keeps the image term I_{n+n'}
  // subdominant while leaving room for the n_bar sweep.
  const long n0 = std::max(1L, lat.n_sites / 3);

  CsvWriter csv(ctx.comment, {"nbar", "I_closed_s_per_m", "broadband_s_per_m",
                              "chain_re_s_per_m"});
  for (long nbar = 0; n0 + nbar <= lat.n_sites; ++nbar) {
    csv.add_row({static_cast<double>(nbar),
                 lattice_I(lat, nbar, delta),
                 lattice_g0_broadband(lat, n0, n0 + nbar, delta),
                 lattice_g0(lat, n0, n0 + nbar, omega, wg.eta).real()});
  }
  csv.write(request.output_path);

  write_meta(request, ctx,
             json{{"sites", lat.n_sites},
                  {"lattice_a_mm", m_to_mm(lat.lattice_a)},
                  {"hopping_MHz", rad_to_mhz(lat.hopping_t)},
                  {"delta_MHz", request.delta_mhz},
                  {"effective_mass_correspondence",
                   lattice_effective_mass(lat) * wg.speed_c * wg.speed_c /
                       wg.omega_c}});
}

}  // namespace

const char* to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::transmission: return "transmission";
    case Subcommand::boundstate: return "boundstate";
    case Subcommand::avoided_crossing: return "avoided-crossing";
    case Subcommand::purcell: return "purcell";
    case Subcommand::rabi: return "rabi";
    case Subcommand::lattice: return "lattice";
  }
  return "unknown";
}

int run(const RunRequest& request) {
  try {
    const RunContext ctx = make_context(request);
    switch (request.subcommand) {
      case Subcommand::transmission: run_transmission(request, ctx); break;
      case Subcommand::boundstate: run_boundstate(request, ctx); break;
      case Subcommand::avoided_crossing:
        run_avoided_crossing(request, ctx);
        break;
      case Subcommand::purcell: run_purcell(request, ctx); break;
      case Subcommand::rabi: run_rabi(request, ctx); break;
      case Subcommand::lattice: run_lattice(request, ctx); break;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error in " << e.operation() << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wgqed
