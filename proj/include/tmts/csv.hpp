#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tmts {

/// Comma-separated writer with a leading '#' metadata block. Numeric fields
/// are written with 17 significant digits so reruns are bitwise-identical.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);

  void comment(const std::string& line);
  void comments(std::span<const std::string> lines);
  void header(std::initializer_list<std::string> cols);

  void field(double v);
  void field(std::size_t v);
  void field(const std::string& v);
  void end_row();

  void row(std::initializer_list<double> vals);

  bool good() const { return out_.good(); }

 private:
  std::ofstream out_;
  bool row_open_ = false;
};

/// Reads the `col`-th numeric column of a CSV written by CsvWriter
/// (skips '#' comments and the header row).
std::vector<double> read_csv_column(const std::filesystem::path& path, std::size_t col);

}  // namespace tmts
