#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wgqed {

// FNV-1a 64-bit over the raw bytes; used to stamp outputs with the config
// they came from.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

// Fixed "%.11e" rendering (12 significant digits) so identical inputs give
// byte-identical files.  NaN renders as "nan".
std::string format_number(double v);

// Accumulates a CSV document: one leading "# ..." provenance comment, a
// header row, then data rows.  LF line endings, '.' decimal separator.
class CsvWriter {
 public:
  CsvWriter(std::string comment, std::vector<std::string> columns);

  void add_row(const std::vector<double>& values);
  void add_row_raw(const std::vector<std::string>& cells);

  const std::string& text() const { return text_; }
  void write(const std::string& path) const;

 private:
  std::string text_;
  std::size_t n_columns_;
};

// Writes `json_text` to path as-is.  Sidecars carry the resolved config,
// library version, and config hash next to each CSV.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wgqed
