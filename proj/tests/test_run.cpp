#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nlohmann/json.hpp"
#include "wgqed/run.hpp"

using namespace wgqed;
namespace fs = std::filesystem;

namespace {

struct TempTree {
  fs::path dir;
  TempTree() {
    dir = fs::temp_directory_path() / "wgqed_run_test";
    fs::create_directories(dir);
  }
  ~TempTree() { fs::remove_all(dir); }
  std::string path(const std::string& name) const {
    return (dir / name).string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string config_dir() { return WGQED_CONFIG_DIR; }

}  // namespace

TEST_CASE("transmission run produces the documented CSV and sidecar") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::transmission;
  req.config_path = config_dir() + "/empty_waveguide.json";
  req.output_path = tmp.path("spectrum.csv");
  req.f_min_ghz = 6.8;
  req.f_max_ghz = 7.2;
  req.n_points = 41;
  REQUIRE(run(req) == 0);

  const std::string text = slurp(req.output_path);
  CHECK(text.rfind("# wgqed transmission", 0) == 0);
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 42);  // header + 41 points
  CHECK(rows[0] == std::vector<std::string>{"f_GHz", "re_S", "im_S",
                                            "abs_S2", "abs_S_dB"});
  CHECK(rows[1][0].rfind("6.8", 0) == 0);
  CHECK(rows.back()[0].rfind("7.2", 0) == 0);

  const auto meta = nlohmann::json::parse(slurp(tmp.path("spectrum.meta.json")));
  CHECK(meta["subcommand"] == "transmission");
  CHECK(meta["provider"] == "pole");
  CHECK(text.find(meta["config_hash"].get<std::string>()) !=
        std::string::npos);
  CHECK(meta["config"]["waveguide"]["omega_c_GHz"].get<double>() ==
        doctest::Approx(6.5213));
}

TEST_CASE("boundstate sweep flags unsolvable points as NaN rows") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::boundstate;
  req.config_path = config_dir() + "/single_qubit.json";
  req.output_path = tmp.path("bound.csv");
  req.wq_min_ghz = 6.0;
  req.wq_max_ghz = 10.0;  // upper half has no stopband root
  req.n_points = 9;
  REQUIRE(run(req) == 0);
  const auto rows = parse_csv(slurp(req.output_path));
  REQUIRE(rows.size() == 10);
  CHECK(rows[0][0] == "wq_GHz");
  CHECK(rows[1][1] != "nan");
  CHECK(rows.back()[1] == "nan");
}

TEST_CASE("run maps failure classes onto distinct exit codes") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::transmission;
  req.config_path = tmp.path("absent.json");
  req.output_path = tmp.path("out.csv");
  req.f_min_ghz = 6.0;
  req.f_max_ghz = 7.0;
  req.n_points = 11;
  CHECK(run(req) == 1);  // unreadable config

  req.config_path = config_dir() + "/empty_waveguide.json";
  req.provider = "astral";
  CHECK(run(req) == 1);  // unknown provider name

  req.provider = "pole";
  req.n_points = 1;
  CHECK(run(req) == 1);  // degenerate sweep

  RunRequest bound;
  bound.subcommand = Subcommand::boundstate;
  bound.config_path = config_dir() + "/single_qubit.json";
  bound.output_path = tmp.path("bound.csv");
  bound.wq_min_ghz = 9.0;
  bound.wq_max_ghz = 10.0;  // nothing to find anywhere
  bound.n_points = 3;
  CHECK(run(bound) == 2);
}

TEST_CASE("avoided-crossing run writes the matrix and a summary") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::avoided_crossing;
  req.config_path = config_dir() + "/two_qubit.json";
  req.output_path = tmp.path("cross.csv");
  req.f_min_ghz = 5.95;
  req.f_max_ghz = 6.12;
  req.n_points = 341;
  req.wq2_min_ghz = 6.08;
  req.wq2_max_ghz = 6.12;
  req.wq2_points = 9;
  REQUIRE(run(req) == 0);

  const auto rows = parse_csv(slurp(req.output_path));
  REQUIRE(rows.size() == 342);
  CHECK(rows[0].size() == 10);  // f_GHz + 9 second-qubit columns
  CHECK(rows[0][1].rfind("wq2_", 0) == 0);

  const auto summary =
      nlohmann::json::parse(slurp(tmp.path("cross.summary.json")));
  CHECK(summary["extracted_J_MHz"].get<double>() > 0.0);
  CHECK(summary["omega_q2_at_min_GHz"].get<double>() > 6.0);
}

TEST_CASE("purcell ladder run emits one column per mode count") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::purcell;
  req.config_path = config_dir() + "/single_qubit.json";
  req.output_path = tmp.path("purcell.csv");
  req.f_min_ghz = 5.9;
  req.f_max_ghz = 6.3;
  req.n_points = 5;
  req.purcell_modes = {1, 20, -1};
  REQUIRE(run(req) == 0);
  const auto rows = parse_csv(slurp(req.output_path));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"wb_GHz", "gamma_r_N1_MHz",
                                            "gamma_r_N20_MHz",
                                            "gamma_r_inf_MHz"});
}

TEST_CASE("rabi run lays traces out as time rows") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::rabi;
  req.config_path = config_dir() + "/single_qubit.json";
  req.output_path = tmp.path("rabi.csv");
  req.f_min_ghz = req.f_max_ghz = 6.02;
  req.n_points = 1;
  req.rabi_mhz = 0.51;
  req.tau_us = 1.3;
  req.t_end_us = 2.6;
  req.t_points = 53;
  REQUIRE(run(req) == 0);
  const auto rows = parse_csv(slurp(req.output_path));
  REQUIRE(rows.size() == 54);
  CHECK(rows[0][0] == "t_us");
  CHECK(rows[0][1].rfind("fd_", 0) == 0);
  CHECK(rows[1][1] == "0.00000000000e+00");  // no emission before the drive

  const auto meta = nlohmann::json::parse(slurp(tmp.path("rabi.meta.json")));
  CHECK(meta["result"]["wb_GHz"].get<double>() < 6.08);
  CHECK(meta["result"]["emission_prefactor"].get<double>() > 0.0);
}

TEST_CASE("lattice run tabulates the below-band propagator") {
  TempTree tmp;
  RunRequest req;
  req.subcommand = Subcommand::lattice;
  req.config_path = config_dir() + "/empty_waveguide.json";
  req.output_path = tmp.path("lattice.csv");
  req.lattice_sites = 60;
  req.delta_mhz = 40.0;
  REQUIRE(run(req) == 0);
  const auto rows = parse_csv(slurp(req.output_path));
  REQUIRE(rows.size() > 30);
  CHECK(rows[0][0] == "nbar");
  // closed-form column decays monotonically in magnitude
  const double first = std::abs(std::stod(rows[1][1]));
  const double later = std::abs(std::stod(rows[11][1]));
  CHECK(later < first);
}
