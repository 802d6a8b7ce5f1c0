#include "wgqed/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "wgqed/errors.hpp"

namespace wgqed {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

CsvWriter::CsvWriter(std::string comment, std::vector<std::string> columns)
    : n_columns_(columns.size()) {
  text_ = "# " + std::move(comment) + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) text_ += ',';
    text_ += columns[i];
  }
  text_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != n_columns_) {
    throw std::logic_error("CsvWriter: row width does not match header");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ',';
    text_ += format_number(values[i]);
  }
  text_ += '\n';
}

void CsvWriter::add_row_raw(const std::vector<std::string>& cells) {
  if (cells.size() != n_columns_) {
    throw std::logic_error("CsvWriter: row width does not match header");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void CsvWriter::write(const std::string& path) const {
  write_text_file(path, text_);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot open output file for writing: " + path);
  }
  out << text;
  if (!out) {
    throw ConfigError("write failed for output file: " + path);
  }
}

}  // namespace wgqed
