#include "tmts/csv.hpp"

#include <sstream>
#include <stdexcept>

#include "tmts/config.hpp"

namespace tmts {

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(path) {
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

void CsvWriter::comments(std::span<const std::string> lines) {
  for (const auto& l : lines) comment(l);
}

void CsvWriter::header(std::initializer_list<std::string> cols) {
  bool first = true;
  for (const auto& c : cols) {
    if (!first) out_ << ",";
    out_ << c;
    first = false;
  }
  out_ << "\n";
}

void CsvWriter::field(double v) {
  if (row_open_) out_ << ",";
  out_ << format_g17(v);
  row_open_ = true;
}

void CsvWriter::field(std::size_t v) {
  if (row_open_) out_ << ",";
  out_ << v;
  row_open_ = true;
}

void CsvWriter::field(const std::string& v) {
  if (row_open_) out_ << ",";
  out_ << v;
  row_open_ = true;
}

void CsvWriter::end_row() {
  out_ << "\n";
  row_open_ = false;
}

void CsvWriter::row(std::initializer_list<double> vals) {
  for (double v : vals) field(v);
  end_row();
}

std::vector<double> read_csv_column(const std::filesystem::path& path, std::size_t col) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<double> out;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // first non-comment line is the header
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      if (c++ == col) {
        out.push_back(std::stod(cell));
        break;
      }
    }
  }
  return out;
}

}  // namespace tmts
