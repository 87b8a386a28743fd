#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tmts/realspace.hpp"

// Self-contained SVG emission: scatter/line/histogram panels and heatmaps.
// Deliberately dependency-free; CSV stays the canonical output.

namespace tmts {

enum class Marker { Plus, Star, Cross, Dot };

class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_scatter(std::span<const double> xs, std::span<const double> ys,
                   Marker marker, const std::string& color, const std::string& label);
  void add_line(std::span<const double> xs, std::span<const double> ys,
                const std::string& color, const std::string& label);
  void add_bars(std::span<const double> edges, std::span<const double> heights,
                const std::string& color, const std::string& label);
  /// Extra annotation line drawn under the legend.
  void annotate(const std::string& text);

  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    int kind;  // 0 scatter, 1 line, 2 bars
    std::vector<double> xs, ys;
    Marker marker;
    std::string color;
    std::string label;
  };
  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  std::vector<std::string> notes_;
};

/// Heatmap of a density field with a short legend block.
void write_heatmap_svg(const std::filesystem::path& path, const DensityField& field,
                       const std::string& title, std::span<const std::string> legend);

}  // namespace tmts
