#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "wgqed/csv.hpp"

using namespace wgqed;

TEST_CASE("FNV-1a 64 matches published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(hash_hex(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("numbers are fixed at 12 significant digits") {
  CHECK(format_number(1.0) == "1.00000000000e+00");
  CHECK(format_number(-2.99792458e8) == "-2.99792458000e+08");
  CHECK(format_number(6.5213e9) == "6.52130000000e+09");
  const double nan = std::nan("");
  CHECK(format_number(nan) == "nan");
  CHECK(format_number(1.0 / 0.0) == "inf");
  CHECK(format_number(-1.0 / 0.0) == "-inf");
}

TEST_CASE("writer emits comment, header, LF rows, deterministically") {
  CsvWriter a("probe run", {"x", "y"});
  a.add_row({1.0, 2.5});
  a.add_row({-3.0, std::nan("")});
  const std::string expect =
      "# probe run\n"
      "x,y\n"
      "1.00000000000e+00,2.50000000000e+00\n"
      "-3.00000000000e+00,nan\n";
  CHECK(a.text() == expect);
  CsvWriter b("probe run", {"x", "y"});
  b.add_row({1.0, 2.5});
  b.add_row({-3.0, std::nan("")});
  CHECK(a.text() == b.text());
}

TEST_CASE("row width is enforced") {
  CsvWriter csv("w", {"x", "y", "z"});
  CHECK_THROWS_AS(csv.add_row({1.0}), std::logic_error);
}

TEST_CASE("files round-trip through disk") {
  const std::string path = "/tmp/wgqed_csv_test.csv";
  CsvWriter csv("disk check", {"v"});
  csv.add_row({42.0});
  csv.write(path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == csv.text());
  std::remove(path.c_str());
}
